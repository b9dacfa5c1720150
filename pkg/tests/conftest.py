"""Shared test configuration.

Exact rational arithmetic has occasional slow examples, so the
hypothesis profile drops the per-example deadline; example counts stay
moderate because every law checked is exact (a failure does not hide
in noise, it only needs one witness).
"""

from hypothesis import HealthCheck, settings

settings.register_profile(
    "milnorkit",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("milnorkit")
