"""Shared numeric inputs used by several test modules."""

PAIR_A1 = [
    [[0.1631135370902057, 0.11600112072013125], [0.9823708115400902, 0.39605960486710756]],
    [[0.061860929755424676, 0.2325542810173995], [0.39111210957450926, 0.2019809359102137]],
]
PAIR_A2 = [
    [[0.15508921433883183, 0.17820377184410963], [0.48648171594508205, 0.01568017636082064]],
    [[0.8250247759993575, 0.1938307874191597], [0.23867299119274843, 0.3935578730402869]],
]

# product entries checked for the 3x3x3 orthogonal family, with their targets
ORTHO3_CHECKED = [
    ((0, 0, 0), 1), ((1, 1, 1), 1), ((2, 2, 2), 1),
    ((0, 0, 1), 0), ((0, 0, 2), 0), ((1, 1, 2), 0), ((1, 1, 0), 0),
    ((2, 2, 0), 0), ((2, 2, 1), 0), ((0, 1, 2), 0), ((1, 0, 2), 0),
]
