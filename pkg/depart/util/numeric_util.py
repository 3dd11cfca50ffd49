import math

TOLERANCE = 1e-9


def is_close(a: float, b: float, tol: float = TOLERANCE) -> bool:
    """Absolute-tolerance equality used by every geometric comparison."""
    return abs(a - b) <= tol


def leq(a: float, b: float, tol: float = TOLERANCE) -> bool:
    return a <= b + tol


def safe_ratio(numerator: float, denominator: float, tol: float = TOLERANCE) -> float:
    """numerator / denominator where 0/0 is 1 and x/0 is +inf for x > 0."""
    if denominator > tol:
        return numerator / denominator
    if numerator > tol:
        return math.inf
    return 1.0
