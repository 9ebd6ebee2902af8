import inspect


def pytest_pycollect_makeitem(collector, name, obj):
    """Library functions named check_* that a test module imports are not tests; skip collecting them."""
    if inspect.isfunction(obj) and getattr(collector, "module", None) is not None \
            and obj.__module__ != collector.module.__name__:
        return []
    return None
