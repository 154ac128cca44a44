"""Small number-theoretic sieves used by the logarithmic transforms"""
from fractions import Fraction


def mobius_upto(limit):
    """Returns a list of length `limit + 1` whose value at index i is the
    Möbius function mu(i) (index 0 holds 0).

    Args:
        limit (int) >= 0
    """
    if limit < 1:
        return [0] * (limit + 1)
    mu = [1] * (limit + 1)
    mu[0] = 0
    is_composite = [False] * (limit + 1)
    for p in range(2, limit + 1):
        if is_composite[p]:
            continue
        for multiple in range(p, limit + 1, p):
            if multiple != p:
                is_composite[multiple] = True
            mu[multiple] = -mu[multiple]
        square = p * p
        for multiple in range(square, limit + 1, square):
            mu[multiple] = 0
    return mu


def totients_upto(limit):
    """Returns a list of length `limit + 1` whose value at index i is the
    Euler totient phi(i) (index 0 holds 0).

    Args:
        limit (int) >= 0
    """
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] != p:
            continue
        for multiple in range(p, limit + 1, p):
            phi[multiple] -= phi[multiple] // p
    return phi


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def generalized_binomial(alpha, k):
    """alpha choose k for rational alpha and integer k >= 0"""
    alpha = Fraction(alpha)
    result = Fraction(1)
    for i in range(k):
        result = result * (alpha - i) / (i + 1)
    return result
