GRID_CONFIG = {
    'max_genus': 3,
    'max_boundaries': 5,
    'max_degree': 5,
    'closed_genera': [2, 3],
    'closed_max_degree': 4,
    'jobs': 1
}

MINDEG_CONFIG = {
    'max_degree': 3,
    # (d!)^rank beyond this is refused
    'max_tuples': 2_000_000
}

SEARCH_CONFIG = {
    # gluing permutations are searched over all of S_n up to this degree
    'exhaustive_degree': 5
}

