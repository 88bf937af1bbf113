"""Accessors for the HEDONIC_* settings with their documented defaults."""

from django.conf import settings


def coalition_cap():
    return getattr(settings, 'HEDONIC_COALITION_CAP', 24)


def partition_cap(is_path=False):
    if is_path:
        return max(getattr(settings, 'HEDONIC_PATH_MAX_ENUM', 14), getattr(settings, 'HEDONIC_MAX_ENUM', 10))
    return getattr(settings, 'HEDONIC_MAX_ENUM', 10)


def default_max_steps(n):
    return getattr(settings, 'HEDONIC_STEP_FACTOR', 4) * n * n


def star_constant():
    return getattr(settings, 'HEDONIC_STAR_CONSTANT', 2)
