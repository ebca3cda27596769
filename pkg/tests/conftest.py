from hypothesis import settings

settings.register_profile("det", derandomize=True, max_examples=200)
settings.load_profile("det")
