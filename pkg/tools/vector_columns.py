"""Published vector certificates for the ten catalogue types that lack a
ring-collapse vertex, keyed by type label.

Vertices are listed a, b, c, ... ; index i of a column is the vector of
vertex i once the complex is reconstructed from the rays.  One column is
shared: the same 18 rays carry three distinct fan structures, one per
listed label.
"""

COLUMN_5_12_6_4_ii = [
    (1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, 2, -1),
    (0, -1, -1), (1, 0, -1), (1, -1, 0), (1, -1, 1),
    (-1, 0, 1), (-1, 1, 0), (-1, 1, -1), (0, -2, -1),
    (1, -1, -1), (0, -1, 1), (0, -1, 0), (0, -2, 1),
]

COLUMN_5_12_6_5_ii = [
    (1, 0, 0), (1, 0, 1), (2, -1, 1), (3, 0, -1),
    (2, 1, -1), (1, 1, 0), (1, -1, 1), (2, 0, -1),
    (1, 1, -1), (0, 1, 0), (0, 0, 1), (0, -1, 1),
    (2, -1, 0), (1, 0, -1), (0, 1, -1), (-1, 1, 0),
    (-1, 0, 0),
]

# shared by 5^14 6^2 7^2 (iii), 5^13 6^4 7^1 (i) and 5^12 6^6 (i)
COLUMN_SHARED_18 = [
    (0, -1, 0), (1, -1, 0), (0, -1, 1), (-1, -1, 1),
    (-1, -1, 0), (-1, -1, -1), (0, -1, -1), (1, 0, 0),
    (0, 0, 1), (-1, 0, 1), (-1, 0, -1), (0, 0, -1),
    (0, 1, -1), (1, 1, 0), (0, 1, 1), (-1, 0, 0),
    (-1, 1, -1), (0, 1, 0),
]

COLUMN_5_12_6_6_ii = [
    (1, 0, 0), (3, 0, -1), (2, 1, -1), (1, 1, 0),
    (3, 0, 1), (3, -1, 1), (2, 0, -1), (1, 1, -1),
    (0, 1, 0), (1, 0, 1), (1, -1, 1), (2, -1, 1),
    (1, 0, -1), (-1, 1, 0), (0, 0, 1), (0, -1, 1),
    (2, -1, 0), (-1, 0, 0),
]

COLUMN_5_12_6_6_iii = [
    (1, 0, 0), (3, 0, -1), (2, 1, -1), (1, 1, 0),
    (1, 0, 1), (3, -1, 1), (2, 0, -1), (1, 1, -1),
    (0, 1, 0), (0, 0, 1), (1, -1, 1), (2, -1, 1),
    (1, 0, -1), (0, 1, -1), (-1, 1, 0), (0, -1, 1),
    (2, -1, 0), (-1, 0, 0),
]

COLUMN_5_12_6_6_iv = [
    (1, 0, 0), (3, 0, -1), (2, 1, -1), (1, 1, 0),
    (1, 0, 1), (2, -1, 1), (2, 0, -1), (1, 1, -1),
    (0, 1, 0), (0, 0, 1), (1, -1, 1), (3, -1, 0),
    (1, 0, -1), (0, 1, -1), (-1, 1, 0), (0, -1, 1),
    (2, -1, 0), (-1, 0, 0),
]

COLUMN_5_12_6_6_v = [
    (0, -1, 0), (-1, 1, -1), (0, -2, -1), (1, -1, -1),
    (0, -1, 1), (-1, 0, 1), (-1, 1, 0), (0, -1, -1),
    (1, 0, -1), (1, -1, 0), (1, -1, 1), (0, 0, 1),
    (-1, 2, 0), (-1, 2, -1), (0, 1, 2), (0, 1, 1),
    (-1, 2, -2), (0, 1, 0),
]

COLUMN_5_12_6_6_vi = [
    (0, -1, 0), (-1, 0, -1), (0, -2, -1), (1, -1, -1),
    (0, -1, 1), (-1, 0, 1), (-1, 1, 0), (0, -1, -1),
    (1, 0, -1), (1, -1, 0), (1, -1, 1), (0, 0, 1),
    (-1, 2, 2), (-2, 2, -1), (0, 1, 2), (0, 1, 1),
    (-1, 1, -1), (0, 1, 0),
]

# label -> (column, expected degree profile label)
SINGLE_COLUMNS = {
    "5^12 6^4 (ii)": (COLUMN_5_12_6_4_ii, "5^12 6^4"),
    "5^12 6^5 (ii)": (COLUMN_5_12_6_5_ii, "5^12 6^5"),
    "5^12 6^6 (ii)": (COLUMN_5_12_6_6_ii, "5^12 6^6"),
    "5^12 6^6 (iii)": (COLUMN_5_12_6_6_iii, "5^12 6^6"),
    "5^12 6^6 (iv)": (COLUMN_5_12_6_6_iv, "5^12 6^6"),
    "5^12 6^6 (v)": (COLUMN_5_12_6_6_v, "5^12 6^6"),
    "5^12 6^6 (vi)": (COLUMN_5_12_6_6_vi, "5^12 6^6"),
}

SHARED_COLUMN_LABELS = {
    "5^14 6^2 7^2 (iii)": "5^14 6^2 7^2",
    "5^13 6^4 7^1 (i)": "5^13 6^4 7^1",
    "5^12 6^6 (i)": "5^12 6^6",
}
