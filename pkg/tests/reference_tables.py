"""Published cohomology multiplicity tables for Sym3..Sym8, keyed by the
first partition of each conjugate pair, with their Poincare polynomials."""

TABLES = {
    3: {(3,): [1, 2], (2, 1): [0, 2]},
    4: {(4,): [1, 2, 2], (3, 1): [0, 1, 4], (2, 2): [0, 2, 4]},
    5: {(5,): [1, 0, 2, 4], (4, 1): [0, 1, 1, 4], (3, 2): [0, 1, 2, 6], (3, 1, 1): [0, 0, 4, 10]},
    6: {
        (6,): [1, 0, 2, 4, 2],
        (5, 1): [0, 1, 1, 3, 8],
        (4, 2): [0, 1, 1, 6, 15],
        (3, 3): [0, 0, 1, 7, 11],
        (4, 1, 1): [0, 0, 2, 5, 13],
        (3, 2, 1): [0, 0, 4, 6, 18],
    },
    7: {
        (7,): [1, 0, 2, 0, 2, 6],
        (6, 1): [0, 1, 1, 3, 3, 6],
        (5, 2): [0, 1, 1, 4, 8, 18],
        (5, 1, 1): [0, 0, 2, 3, 10, 24],
        (4, 3): [0, 0, 1, 4, 7, 18],
        (4, 2, 1): [0, 0, 2, 8, 17, 46],
        (3, 3, 1): [0, 0, 1, 5, 11, 28],
        (4, 1, 1, 1): [0, 0, 0, 6, 8, 22],
    },
    8: {
        (8,): [1, 0, 0, 0, 2, 6, 4],
        (7, 1): [0, 1, 1, 1, 1, 3, 10],
        (6, 2): [0, 1, 1, 2, 4, 10, 28],
        (6, 1, 1): [0, 0, 2, 3, 3, 7, 26],
        (5, 3): [0, 0, 1, 3, 6, 10, 34],
        (5, 2, 1): [0, 0, 2, 5, 16, 25, 76],
        (5, 1, 1, 1): [0, 0, 0, 3, 10, 22, 50],
        (4, 4): [0, 0, 0, 1, 4, 19, 30],
        (4, 3, 1): [0, 0, 1, 6, 18, 27, 84],
        (4, 2, 2): [0, 0, 0, 3, 16, 31, 74],
        (4, 2, 1, 1): [0, 0, 0, 8, 22, 36, 112],
        (3, 3, 2): [0, 0, 0, 4, 10, 16, 52],
    },
}

CAPTIONS = {
    3: "Sym3, P(t) = 2 + 8t",
    4: "Sym4, P(t) = 2 + 14t + 36t²",
    5: "Sym5, P(t) = 2 + 18t + 56t² + 160t³",
    6: "Sym6, P(t) = 2 + 28t + 146t² + 412t³ + 1012t⁴",
    7: "Sym7, P(t) = 2 + 40t + 314t² + 1240t³ + 2572t⁴ + 6648t⁵",
    8: "Sym8, P(t) = 2 + 54t + 590t² + 3330t³ + 10212t⁴ + 17744t⁵ + 50644t⁶",
}
