from necklace.component.series import TriSeries, tri_mul


def hkr(n, trunc):
    """Hochschild series of the polynomial ring in n even variables of
    weight one: (1 + yxz)^n / (1 - z)^n
    """
    if n < 1:
        raise ValueError('hkr needs n >= 1, got {}'.format(n))
    yxz = TriSeries.monomial(1, 1, 1, 1, trunc)
    z = TriSeries.monomial(0, 1, 0, 1, trunc)
    return (1 + yxz) ** n * (1 - z) ** -n


def exterior_hh(n, trunc):
    """Hochschild series of the exterior algebra on n odd generators of
    weight one: (1 + yz)^n / (1 - xz)^n
    """
    if n < 1:
        raise ValueError('exterior_hh needs n >= 1, got {}'.format(n))
    yz = TriSeries.monomial(0, 1, 1, 1, trunc)
    xz = TriSeries.monomial(1, 1, 0, 1, trunc)
    return (1 + yz) ** n * (1 - xz) ** -n


def tensor_hh(hh_a, hh_b):
    """Hochschild series of A (x) B for commutative A and B"""
    return tri_mul(hh_a, hh_b)
