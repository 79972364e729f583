"""Shared test configuration."""

from hypothesis import HealthCheck, settings

# Linear-algebra examples can be slow on loaded machines; wall-clock deadlines
# only add flakiness there.
settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")
