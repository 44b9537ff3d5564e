//! Reference values transcribed cell by cell from the published tables.
//! Polynomials are listed by coefficient, constant term first.

/// `(r, k, coefficients of psi_k(r, x))`.
pub(crate) const PSI: &[(usize, i64, &[i64])] = &[
    (0, 1, &[1]),                   // psi table, r=0, k=1: 1
    (1, 1, &[-1, 1]),               // psi table, r=1, k=1: x-1
    (1, 2, &[1]),                   // psi table, r=1, k=2: 1
    (2, 1, &[2, -3, 1]),            // psi table, r=2, k=1: x^2-3x+2
    (2, 2, &[-5, 3]),               // psi table, r=2, k=2: 3x-5
    (2, 3, &[3]),                   // psi table, r=2, k=3: 3
    (3, 1, &[-6, 11, -6, 1]),       // psi table, r=3, k=1: x^3-6x^2+11x-6
    (3, 2, &[26, -26, 6]),          // psi table, r=3, k=2: 6x^2-26x+26
    (3, 3, &[-35, 15]),             // psi table, r=3, k=3: 15x-35
    (3, 4, &[15]),                  // psi table, r=3, k=4: 15
    (4, 1, &[24, -50, 35, -10, 1]), // psi table, r=4, k=1: x^4-10x^3+35x^2-50x+24
    (4, 2, &[-154, 200, -80, 10]),  // psi table, r=4, k=2: 10x^3-80x^2+200x-154
    (4, 3, &[340, -255, 45]),       // psi table, r=4, k=3: 45x^2-255x+340
    (4, 4, &[-315, 105]),           // psi table, r=4, k=4: 105x-315
    (4, 5, &[105]),                 // psi table, r=4, k=5: 105
];

/// `(n, k, coefficients of Q_{n,k}(x))`.
pub(crate) const Q: &[(usize, i64, &[i64])] = &[
    (1, 0, &[1]),                 // Q table, n=1, k=0: 1
    (2, 0, &[1, 1]),              // Q table, n=2, k=0: x+1
    (2, 1, &[1]),                 // Q table, n=2, k=1: 1
    (3, 0, &[2, 3, 1]),           // Q table, n=3, k=0: x^2+3x+2
    (3, 1, &[4, 3]),              // Q table, n=3, k=1: 3x+4
    (3, 2, &[3]),                 // Q table, n=3, k=2: 3
    (4, 0, &[6, 11, 6, 1]),       // Q table, n=4, k=0: x^3+6x^2+11x+6
    (4, 1, &[18, 22, 6]),         // Q table, n=4, k=1: 6x^2+22x+18
    (4, 2, &[25, 15]),            // Q table, n=4, k=2: 15x+25
    (4, 3, &[15]),                // Q table, n=4, k=3: 15
    (5, 0, &[24, 50, 35, 10, 1]), // Q table, n=5, k=0: x^4+10x^3+35x^2+50x+24
    (5, 1, &[96, 150, 70, 10]),   // Q table, n=5, k=1: 10x^3+70x^2+150x+96
    (5, 2, &[190, 195, 45]),      // Q table, n=5, k=2: 45x^2+195x+190
    (5, 3, &[210, 105]),          // Q table, n=5, k=3: 105x+210
    (5, 4, &[105]),               // Q table, n=5, k=4: 105
];

/// Largest `r` of the psi table and largest `n` of the Q table.
pub(crate) const PSI_RMAX: usize = 4;
pub(crate) const Q_NMAX: usize = 5;

/// `(i, n, k, |R_{n,k}[lambda = i]|)`; blank cells of the published tables are zero.
pub(crate) const LAMBDA: &[(u32, usize, usize, u64)] = &[
    (1, 2, 1, 1),  // lambda=1 table, n=2, k=1
    (1, 3, 1, 1),  // lambda=1 table, n=3, k=1
    (1, 3, 2, 2),  // lambda=1 table, n=3, k=2
    (1, 4, 1, 2),  // lambda=1 table, n=4, k=1
    (1, 4, 2, 7),  // lambda=1 table, n=4, k=2
    (1, 4, 3, 8),  // lambda=1 table, n=4, k=3
    (1, 5, 1, 6),  // lambda=1 table, n=5, k=1
    (1, 5, 2, 29), // lambda=1 table, n=5, k=2
    (1, 5, 3, 59), // lambda=1 table, n=5, k=3
    (1, 5, 4, 48), // lambda=1 table, n=5, k=4
    (2, 2, 1, 0),  // lambda=2 table, n=2, k=1 (blank)
    (2, 3, 1, 1),  // lambda=2 table, n=3, k=1
    (2, 3, 2, 1),  // lambda=2 table, n=3, k=2
    (2, 4, 1, 2),  // lambda=2 table, n=4, k=1
    (2, 4, 2, 5),  // lambda=2 table, n=4, k=2
    (2, 4, 3, 4),  // lambda=2 table, n=4, k=3
    (2, 5, 1, 6),  // lambda=2 table, n=5, k=1
    (2, 5, 2, 23), // lambda=2 table, n=5, k=2
    (2, 5, 3, 37), // lambda=2 table, n=5, k=3
    (2, 5, 4, 24), // lambda=2 table, n=5, k=4
    (3, 2, 1, 0),  // lambda=3 table, n=2, k=1 (blank)
    (3, 3, 1, 0),  // lambda=3 table, n=3, k=1 (blank)
    (3, 3, 2, 0),  // lambda=3 table, n=3, k=2 (blank)
    (3, 4, 1, 2),  // lambda=3 table, n=4, k=1
    (3, 4, 2, 4),  // lambda=3 table, n=4, k=2
    (3, 4, 3, 3),  // lambda=3 table, n=4, k=3
    (3, 5, 1, 6),  // lambda=3 table, n=5, k=1
    (3, 5, 2, 20), // lambda=3 table, n=5, k=2
    (3, 5, 3, 29), // lambda=3 table, n=5, k=3
    (3, 5, 4, 18), // lambda=3 table, n=5, k=4
];
