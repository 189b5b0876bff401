"""Expected values for the reproducible tables, one tagged entry per row.

Element codes over GF(4) follow the default modulus x^2 + x + 1:
0, 1, 2, 3 stand for 0, 1, w, w^2.
"""

from __future__ import annotations

# the two [6, 2]_4 generators of the worked hull example
EXAMPLE_G1 = [[1, 0, 2, 0, 1, 2], [0, 1, 0, 3, 0, 2]]
EXAMPLE_G2 = [[1, 0, 1, 0, 2, 2], [0, 1, 0, 1, 2, 2]]

# (tag, first code, second code, rule, [n, k, d], hermitian hull, label)
# codes: C, Ch = C^{⊥H}, D, Dh = D^{⊥H}
TABLE1 = [
    ("I.1", "C", "C", "direct_sum", (12, 4, 3), 0, "lcd"),
    ("I.2", "C", "Ch", "direct_sum", (12, 6, 2), 0, "lcd"),
    ("I.3", "C", "Dh", "direct_sum", (12, 6, 2), 2, ""),
    ("I.4", "Ch", "Ch", "direct_sum", (12, 8, 2), 0, "lcd"),
    ("I.5", "Ch", "Dh", "direct_sum", (12, 8, 2), 2, ""),
    ("I.6", "D", "Dh", "direct_sum", (12, 6, 2), 4, ""),
    ("I.7", "Dh", "Dh", "direct_sum", (12, 8, 2), 4, ""),
    ("I.8", "C", "D", "u_uv", (12, 4, 4), 0, "lcd"),
    ("I.9", "Ch", "D", "u_uv", (12, 6, 4), 2, ""),
    ("I.10", "D", "D", "u_uv", (12, 4, 4), 4, "so"),
    ("I.11", "Dh", "D", "u_uv", (12, 6, 4), 6, "sd"),
]

# (tag, n, [2n, n, d], "sd" | "almost_sd", optimality annotation)
TABLE2 = [
    ("II.2", 2, (4, 2, 2), "sd", "optimal"),
    ("II.3", 3, (6, 3, 3), "almost_sd", "optimal"),
    ("II.4", 4, (8, 4, 4), "sd", "optimal"),
    ("II.5", 5, (10, 5, 4), "almost_sd", "optimal"),
    ("II.6", 6, (12, 6, 4), "sd", "optimal"),
    ("II.7", 7, (14, 7, 4), "almost_sd", "optimal"),
    ("II.8", 8, (16, 8, 4), "sd", "almost optimal"),
    ("II.9", 9, (18, 9, 4), "almost_sd", ""),
    ("II.10", 10, (20, 10, 4), "sd", ""),
]

# (tag, t, n, [n, k, d], optimality annotation)
TABLE3 = [
    ("III.1", 0, 4, (8, 4, 4), "optimal"),
    ("III.2", 0, 6, (12, 6, 4), "optimal"),
    ("III.3", 1, 4, (16, 5, 8), "optimal"),
    ("III.4", 0, 8, (16, 8, 4), "almost optimal"),
    ("III.5", 1, 6, (24, 7, 8), ""),
    ("III.6", 2, 4, (32, 6, 16), "optimal"),
    ("III.7", 1, 8, (32, 9, 8), ""),
    ("III.8", 2, 6, (48, 8, 16), ""),
    ("III.9", 3, 4, (64, 7, 32), "optimal"),
    ("III.10", 2, 8, (64, 10, 16), ""),
    ("III.11", 3, 6, (96, 9, 32), ""),
    ("III.12", 4, 4, (128, 8, 64), "optimal"),
    ("III.13", 3, 8, (128, 11, 32), ""),
    ("III.14", 4, 6, (192, 10, 64), ""),
    ("III.15", 5, 4, (256, 9, 128), "optimal"),
    ("III.16", 4, 8, (256, 12, 64), ""),
    ("III.17", 5, 6, (384, 11, 128), ""),
    ("III.18", 5, 8, (512, 13, 128), ""),
]

# t -> [2^(t+1), t+1, 2^t]
EXAMPLE_RM = [(t, (2 ** (t + 1), t + 1, 2**t)) for t in range(1, 8)]
# t -> [2^(t+1) - 2, t+1, 2^t - 1]
EXAMPLE_SIMPLEX = [(t, (2 ** (t + 1) - 2, t + 1, 2**t - 1)) for t in range(1, 11)]

# (tag, q, C1 [n,k,d], C2 [n,k,d], result [n,k,d], best known d, annotation)
TABLE4 = [
    ("IV.1", 4, (4, 1, 4), (4, 1, 4), (8, 2, 4), 6, ""),
    ("IV.2", 4, (4, 2, 3), (4, 1, 4), (8, 3, 4), 5, "almost optimal"),
    ("IV.3", 4, (4, 3, 2), (4, 1, 4), (8, 4, 4), 4, "optimal"),
    ("IV.4", 8, (4, 2, 3), (4, 1, 4), (8, 3, 4), 6, ""),
    ("IV.5", 8, (4, 3, 2), (4, 1, 4), (8, 4, 4), 5, "almost optimal"),
    ("IV.6", 8, (5, 3, 3), (5, 1, 5), (10, 4, 5), 6, "almost optimal"),
    ("IV.7", 8, (5, 3, 3), (5, 2, 4), (10, 5, 4), 5, "almost optimal"),
    ("IV.8", 8, (6, 3, 4), (6, 1, 6), (12, 4, 6), 8, ""),
    ("IV.9", 8, (6, 4, 3), (6, 1, 6), (12, 5, 6), 7, "almost optimal"),
    ("IV.10", 8, (6, 4, 3), (6, 2, 5), (12, 6, 5), 6, "almost optimal"),
    ("IV.11", 8, (7, 4, 4), (7, 1, 7), (14, 5, 7), 9, ""),
    ("IV.12", 8, (7, 5, 3), (7, 1, 7), (14, 6, 6), 8, ""),
    ("IV.13", 8, (7, 5, 3), (7, 2, 6), (14, 7, 6), 7, "almost optimal"),
    ("IV.14", 8, (8, 4, 5), (8, 1, 8), (16, 5, 8), 10, ""),
    ("IV.15", 8, (8, 5, 4), (8, 1, 8), (16, 6, 8), 9, "almost optimal"),
    ("IV.16", 8, (8, 6, 3), (8, 1, 8), (16, 7, 6), 8, ""),
    ("IV.17", 8, (8, 6, 3), (8, 2, 7), (16, 8, 6), 8, ""),
]

# (tag, q, C1, C2, result)
TABLE5 = [
    ("V.1", 16, (2, 1, 2), (2, 1, 2), (4, 2, 2)),
    ("V.2", 16, (3, 2, 2), (3, 1, 3), (6, 3, 3)),
    ("V.3", 16, (4, 3, 2), (4, 1, 4), (8, 4, 4)),
    ("V.4", 16, (17, 11, 7), (17, 4, 14), (34, 15, 14)),
    ("V.5", 16, (17, 12, 6), (17, 4, 14), (34, 16, 12)),
    ("V.6", 16, (17, 13, 5), (17, 4, 14), (34, 17, 10)),
    ("V.7", 64, (2, 1, 2), (2, 1, 2), (4, 2, 2)),
    ("V.8", 64, (3, 2, 2), (3, 1, 3), (6, 3, 3)),
    ("V.9", 64, (4, 3, 2), (4, 1, 4), (8, 4, 4)),
    ("V.10", 64, (5, 3, 3), (5, 1, 5), (10, 4, 5)),
    ("V.11", 64, (5, 3, 3), (5, 2, 4), (10, 5, 4)),
    ("V.12", 64, (6, 4, 3), (6, 1, 6), (12, 5, 6)),
    ("V.13", 64, (6, 4, 3), (6, 2, 5), (12, 6, 5)),
    ("V.14", 64, (7, 4, 4), (7, 1, 7), (14, 5, 7)),
    ("V.15", 64, (7, 5, 3), (7, 2, 6), (14, 7, 6)),
    ("V.16", 64, (8, 5, 4), (8, 1, 8), (16, 6, 8)),
    ("V.17", 64, (8, 5, 4), (8, 2, 7), (16, 7, 7)),
    ("V.18", 64, (8, 6, 3), (8, 2, 7), (16, 8, 6)),
    ("V.19", 64, (65, 37, 29), (65, 8, 58), (130, 45, 58)),
    ("V.20", 64, (65, 42, 24), (65, 8, 58), (130, 50, 48)),
    ("V.21", 64, (65, 47, 19), (65, 8, 58), (130, 55, 38)),
    ("V.22", 64, (65, 52, 14), (65, 8, 58), (130, 60, 28)),
    ("V.23", 64, (65, 57, 9), (65, 8, 58), (130, 65, 18)),
]

# (tag, C1 [n,k,d], C2 [n,k,d], derived LCD [n,k,d], previously best d)
TABLE6 = [
    ("VI.1", (16, 8, 5), (22, 13, 5), (38, 21, 5), 4),
    ("VI.2", (19, 10, 5), (20, 11, 5), (39, 21, 5), 4),
    ("VI.3", (17, 9, 5), (22, 13, 5), (39, 22, 5), 4),
    ("VI.4", (17, 9, 5), (23, 12, 6), (40, 21, 5), 4),
    ("VI.5", (20, 11, 5), (20, 11, 5), (40, 22, 5), 4),
]
