import logging

from arctic.schemas.models import DerivTower

logger = logging.getLogger(__name__)

_towers = {"tower": None}
_enumerations = {}


def get_tower(k_max: int) -> DerivTower:
    """Cot derivative tower reaching at least order k_max, grown on demand."""
    from arctic.core.trig_core import cot_derivative_polynomials

    tower = _towers["tower"]
    if tower is None or len(tower.polys) <= k_max:
        tower = cot_derivative_polynomials(max(k_max, 2 * len(tower.polys) if tower else k_max))
        _towers["tower"] = tower
        logger.debug(f"cot tower grown to order {len(tower.polys) - 1}")
    return tower


def get_or_compute_enumeration(key: tuple, compute):
    if key not in _enumerations:
        _enumerations[key] = compute()
    else:
        logger.debug(f"enumeration cache hit for {key}")
    return _enumerations[key]


def clear_caches():
    _towers["tower"] = None
    _enumerations.clear()
