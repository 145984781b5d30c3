"""Published saturation values (centi-ebits) that the ``tables`` command compares against.

``E_MAX`` entries are upper bounds from the literature on quadratic
Hamiltonians; they are echoed for comparison and never computed here.
"""

# solid -> (vertex count, mean-field column as printed, E_inf, E_max)
TABLE1 = {
    "tetrahedron": (4, 19.74, 19.74, 19.74),
    "cube": (8, 8.30, 9.80, 19.74),
    "octahedron": (6, 4.68, 9.74, 10.75),
    "dodecahedron": (20, 2.15, 7.00, 11.12),
    "icosahedron": (12, 0.83, 4.51, 5.37),
}

# solid -> EoF by graph distance 1, 2, ... up to the diameter
TABLE2 = {
    "tetrahedron": (19.74,),
    "cube": (9.80, 1.08, 0.24),
    "octahedron": (9.74, 2.58),
    "dodecahedron": (7.00, 0.0, 0.0, 0.0, 0.0),
    "icosahedron": (4.51, 0.0, 0.0),
}

# lattice dimension -> (E_inf, E_max)
TABLE3 = {
    1: (16.34, 30.0),
    2: (3.54, 6.31),
    3: (1.50, 2.62),
}

PATH3_SATURATION = 13.62
TRIANGLE_SATURATION = 40.08
# two-vertex ground state: EoF ~ offset + log2(omega) for large omega (ebits)
TWO_VERTEX_LOG_OFFSET = -0.56
