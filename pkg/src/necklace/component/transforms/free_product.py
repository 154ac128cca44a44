from necklace.component.series import tri_from_signed

from .logarithms import hcfree


def free_product_hc(hc_a, hc_b, a, b):
    """Cyclic homology series of the free product A * B.

    Positive degrees add. Degree 0 gains HC_0 of the tensor algebra on
    A^+ (x) B^+, i.e. hcfree((A - 1)(B - 1)).
    """
    return hc_a + hc_b + tri_from_signed(hcfree((a - 1) * (b - 1)))
