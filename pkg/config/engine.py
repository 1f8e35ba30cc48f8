ENGINE_CONFIG = {
    # two rays of period <= L are equal iff they agree on factor * L letters
    'ray_agreement_factor': 2
}

ORACLE_CONFIG = {
    'interval_spacing': 3.0,
    'interval_radius': 1.0,
    'pairing_tolerance': 1e-9,
    'plateau_limit': 4096,
    'depth_per_letter': 2,
    'depth_padding': 2,
    'max_default_depth': 10
}
