import os

from hypothesis import settings

# default profile is derandomized so every run checks the same examples;
# HYPOTHESIS_PROFILE=stress explores 2000 fresh examples per property
settings.register_profile("default", max_examples=100, derandomize=True)
settings.register_profile("stress", max_examples=2000)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))
