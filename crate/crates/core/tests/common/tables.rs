//! Published error tables. Each entry is `(value, order)` per scheme
//! (ICN, θ-ICN, swapped, GA, AA) and resolution; the first resolution has
//! no order.

pub type Table = [[(f64, Option<f64>); 4]; 5];

pub const LINEAR_L1: Table = [
    [(1.8e-4, None), (4.6e-5, Some(2.0)), (1.2e-5, Some(2.0)), (2.9e-6, Some(2.0))],
    [(1.6e-3, None), (7.9e-4, Some(1.0)), (3.9e-4, Some(1.0)), (2.0e-4, Some(1.0))],
    [(1.6e-3, None), (7.9e-4, Some(1.0)), (3.9e-4, Some(1.0)), (2.0e-4, Some(1.0))],
    [(2.0e-4, None), (4.9e-5, Some(2.0)), (1.2e-5, Some(2.0)), (3.1e-6, Some(2.0))],
    [(1.9e-4, None), (4.7e-5, Some(2.0)), (1.2e-5, Some(2.0)), (2.9e-6, Some(2.0))],
];

pub const LINEAR_L2: Table = [
    [(1.5e-5, None), (2.6e-6, Some(2.5)), (4.5e-7, Some(2.5)), (8.0e-8, Some(2.5))],
    [(1.3e-4, None), (4.4e-5, Some(1.5)), (1.5e-5, Some(1.5)), (5.5e-6, Some(1.5))],
    [(1.3e-4, None), (4.4e-5, Some(1.5)), (1.6e-5, Some(1.5)), (5.5e-6, Some(1.5))],
    [(1.5e-5, None), (2.7e-6, Some(2.5)), (4.8e-7, Some(2.5)), (8.6e-8, Some(2.5))],
    [(1.5e-5, None), (2.6e-6, Some(2.5)), (4.6e-7, Some(2.5)), (8.1e-8, Some(2.5))],
];

pub const SEMILINEAR_L1: Table = [
    [(1.3e-4, None), (3.3e-5, Some(2.0)), (8.1e-6, Some(2.0)), (2.0e-6, Some(2.0))],
    [(1.1e-3, None), (5.4e-4, Some(1.0)), (2.7e-4, Some(1.0)), (1.4e-4, Some(1.0))],
    [(1.1e-3, None), (5.3e-4, Some(1.1)), (2.7e-4, Some(1.0)), (1.3e-4, Some(1.0))],
    [(1.4e-4, None), (3.5e-5, Some(2.0)), (8.7e-6, Some(2.0)), (2.2e-6, Some(2.0))],
    [(1.3e-4, None), (3.3e-5, Some(2.0)), (8.2e-6, Some(2.0)), (2.1e-6, Some(2.0))],
];

pub const SEMILINEAR_L2: Table = [
    [(1.1e-5, None), (2.0e-6, Some(2.5)), (3.5e-7, Some(2.5)), (6.1e-8, Some(2.5))],
    [(9.2e-5, None), (3.2e-5, Some(1.5)), (1.1e-5, Some(1.5)), (4.0e-6, Some(1.5))],
    [(8.9e-5, None), (3.2e-5, Some(1.5)), (1.1e-5, Some(1.5)), (4.0e-6, Some(1.5))],
    [(1.2e-5, None), (2.1e-6, Some(2.5)), (3.7e-7, Some(2.5)), (6.5e-8, Some(2.5))],
    [(1.1e-5, None), (2.0e-6, Some(2.5)), (3.5e-7, Some(2.5)), (6.2e-8, Some(2.5))],
];

pub const SEMILINEAR_LINF: Table = [
    [(2.7e-4, None), (6.7e-5, Some(2.0)), (1.7e-5, Some(2.0)), (4.2e-6, Some(2.0))],
    [(2.5e-3, None), (1.2e-3, Some(1.1)), (6.2e-4, Some(1.0)), (3.1e-4, Some(1.0))],
    [(2.5e-3, None), (1.2e-3, Some(1.1)), (6.2e-4, Some(1.0)), (3.2e-4, Some(1.0))],
    [(2.9e-4, None), (7.2e-5, Some(2.0)), (1.8e-5, Some(2.0)), (4.5e-6, Some(2.0))],
    [(2.7e-4, None), (6.8e-5, Some(2.0)), (1.7e-5, Some(2.0)), (4.3e-6, Some(2.0))],
];

pub const BURGERS_L1: Table = [
    [(2.9e-7, None), (7.3e-8, Some(2.0)), (1.8e-8, Some(2.0)), (4.3e-9, Some(2.1))],
    [(7.8e-5, None), (3.9e-5, Some(1.0)), (1.9e-5, Some(1.0)), (9.7e-6, Some(1.0))],
    [(7.8e-5, None), (3.9e-5, Some(1.0)), (1.9e-5, Some(1.0)), (9.7e-6, Some(1.0))],
    [(4.7e-7, None), (1.2e-7, Some(2.0)), (2.9e-8, Some(2.0)), (7.1e-9, Some(2.0))],
    [(3.4e-7, None), (8.5e-8, Some(2.0)), (2.1e-8, Some(2.0)), (5.0e-9, Some(2.1))],
];

pub const BURGERS_L2: Table = [
    [(9.0e-8, None), (2.3e-8, Some(2.0)), (5.6e-9, Some(2.0)), (1.3e-9, Some(2.1))],
    [(2.0e-5, None), (1.0e-5, Some(1.0)), (5.0e-6, Some(1.0)), (2.5e-6, Some(1.0))],
    [(2.0e-5, None), (1.0e-5, Some(1.0)), (5.0e-6, Some(1.0)), (2.5e-6, Some(1.0))],
    [(1.4e-7, None), (3.6e-8, Some(2.0)), (8.9e-9, Some(2.0)), (2.2e-9, Some(2.0))],
    [(1.0e-7, None), (2.6e-8, Some(1.9)), (6.3e-9, Some(2.0)), (1.5e-9, Some(2.1))],
];

pub const BURGERS_LINF: Table = [
    [(1.7e-6, None), (4.2e-7, Some(2.0)), (1.0e-7, Some(2.1)), (2.5e-8, Some(2.0))],
    [(3.3e-4, None), (1.7e-4, Some(1.0)), (8.4e-5, Some(1.0)), (4.2e-5, Some(1.0))],
    [(3.4e-4, None), (1.7e-4, Some(1.0)), (8.4e-5, Some(1.0)), (4.2e-5, Some(1.0))],
    [(2.7e-6, None), (6.7e-7, Some(2.0)), (1.7e-7, Some(2.0)), (4.0e-8, Some(2.1))],
    [(1.8e-6, None), (4.6e-7, Some(2.0)), (1.1e-7, Some(2.1)), (2.7e-8, Some(2.0))],
];
