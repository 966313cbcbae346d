"""Closed-form lambda_1 for named families with equal edge lengths."""
import math

from utils.exceptions import ValidationError

KNOWN_KINDS = ("interval", "circle", "flower", "star", "pumpkin")


def analytic_lambda1(kind: str, length: float, count: int = 1) -> float:
    """lambda_1 of a named family.

    Args:
        kind: interval, circle, flower, star or pumpkin
        length: total length for interval, circle and flower; edge length for
            star and pumpkin
        count: petals, rays or parallel edges
    """
    if not length > 0:
        raise ValidationError(f"length must be positive, got {length}")
    if count < 1:
        raise ValidationError(f"edge count must be at least 1, got {count}")

    if kind == "interval":
        return math.pi ** 2 / length ** 2
    if kind == "circle":
        return 4.0 * math.pi ** 2 / length ** 2
    if kind == "flower":
        if count == 1:
            return 4.0 * math.pi ** 2 / length ** 2
        # sine mode on one petal, zero at the center
        return math.pi ** 2 * count ** 2 / length ** 2
    if kind == "star":
        if count == 1:
            return math.pi ** 2 / length ** 2
        # antisymmetric ray mode vanishing at the center
        return math.pi ** 2 / (4.0 * length ** 2)
    if kind == "pumpkin":
        # cos(pi x / l) on every edge, flux-free at both hubs
        return math.pi ** 2 / length ** 2

    raise ValidationError(f"no closed form for family '{kind}' (known: {', '.join(KNOWN_KINDS)})")
