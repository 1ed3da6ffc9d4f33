from hypothesis import HealthCheck, settings

# The pure-python eigensolver makes per-example timing noisy; property tests
# are bounded by max_examples instead of wall-clock deadlines.
settings.register_profile(
    "puritylab",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("puritylab")
