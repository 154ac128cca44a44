"""Hochschild and cyclic homology dimensions by exact rank computations

Every (weight, parity) block is independent. Within a block, with L the
tensor length:

- cyclic homology HC_n is the homology at L = n + 1 of the Connes complex
  (coker(1 - t), b), and again of (ker(1 - t), b') through the norm map;
- Hochschild homology HH_n is the homology of the total complex
  Tot_n = I^{L=n+1} (b column) + I^{L=n} (b' column) with
  d(w, u) = (b w + (1 - t) u, -b' u).

The sign degree of a class in homological degree n is the parity of its
words plus n.
"""
import logging
from collections import namedtuple

from necklace.exceptions import OracleConsistencyError
from necklace.util.linalg import rank

from .complexes import ChainMaps, GradedBasis
from .table import HomologyTable, bookkeeping_report

Orbits = namedtuple('Orbits', ['representatives', 'coordinates', 'members'])

BlockDims = namedtuple('BlockDims', ['hc', 'norm_hc', 'hh'])


def cyclic_orbits(maps, length, weight, parity):
    """Orbits of t on the basis tensors of one block.

    Returns the representatives of the orbits that survive in coker(1 - t)
    (those where the full turn comes back with sign +1), ``coordinates``
    {tensor: (orbit index, sign)} with [tensor] = sign [representative], and
    ``members`` [[(tensor, sign)]] per surviving orbit.
    """
    representatives, coordinates, members = [], {}, []
    seen = set()
    for tensor in maps.basis.block(length, weight, parity):
        if tensor in seen:
            continue
        orbit = [(tensor, 1)]
        seen.add(tensor)
        sign, current = maps.t(tensor)
        while current != tensor:
            orbit.append((current, sign))
            seen.add(current)
            step, current = maps.t(current)
            sign *= step
        if sign != 1:
            continue
        index = len(representatives)
        representatives.append(tensor)
        members.append(orbit)
        for member, member_sign in orbit:
            coordinates[member] = (index, member_sign)
    return Orbits(representatives, coordinates, members)


def _connes_rows(maps, orbits, target_orbits):
    rows = []
    for representative in orbits.representatives:
        row = {}
        for tensor, value in maps.b(representative).items():
            if tensor in target_orbits.coordinates:
                index, sign = target_orbits.coordinates[tensor]
                row[index] = row.get(index, 0) + sign * value
        rows.append(row)
    return rows


def _norm_rows(maps, orbits, target_orbits):
    rows = []
    target_index = {rep: i for i, rep in enumerate(target_orbits.representatives)}
    for orbit in orbits.members:
        image = maps.apply(maps.b_prime, dict(orbit))
        rows.append({target_index[tensor]: value for tensor, value in image.items()
                     if tensor in target_index})
    return rows


def _total_rows(maps, basis, n, weight, parity):
    """Rows of d_n: Tot_n -> Tot_{n-1}"""
    b_columns = basis.index(n, weight, parity)
    offset = len(b_columns)
    b_prime_columns = basis.index(n - 1, weight, parity)
    rows = []
    for tensor in basis.block(n + 1, weight, parity):
        rows.append({b_columns[target]: value for target, value in maps.b(tensor).items()})
    for tensor in basis.block(n, weight, parity):
        row = {b_columns[target]: value
               for target, value in maps.one_minus_t(tensor).items()}
        for target, value in maps.b_prime(tensor).items():
            row[offset + b_prime_columns[target]] = -value
        rows.append(row)
    return rows


def block_dims(maps, weight, parity, max_hdeg, check=True):
    """HC_n (both ways) and HH_n for n <= max_hdeg on one (weight, parity)
    block, keyed by (n, weight, sign)
    """
    basis = maps.basis
    top = min(weight, max_hdeg + 2, basis.max_length)
    if check:
        for length in range(1, top + 1):
            maps.check_block(length, weight, parity)
    orbits = {length: cyclic_orbits(maps, length, weight, parity)
              for length in range(1, top + 1)}

    connes_rank = {1: 0}
    norm_rank = {1: 0}
    for length in range(2, top + 1):
        connes_rank[length] = rank(_connes_rows(maps, orbits[length], orbits[length - 1]))
        norm_rank[length] = rank(_norm_rows(maps, orbits[length], orbits[length - 1]))

    hc, norm_hc, hh = {}, {}, {}
    for n in range(0, min(max_hdeg, weight - 1) + 1):
        length = n + 1
        slot = (n, weight, (parity + n) % 2)
        dimension = len(orbits[length].representatives)
        hc[slot] = dimension - connes_rank[length] - connes_rank.get(length + 1, 0)
        norm_hc[slot] = dimension - norm_rank[length] - norm_rank.get(length + 1, 0)

    total_rank = {0: 0}
    for n in range(1, min(max_hdeg + 1, weight) + 1):
        total_rank[n] = rank(_total_rows(maps, basis, n, weight, parity))
    for n in range(0, min(max_hdeg, weight) + 1):
        slot = (n, weight, (parity + n) % 2)
        dimension = basis.dimension(n + 1, weight, parity) + basis.dimension(n, weight, parity)
        hh[slot] = dimension - total_rank.get(n, 0) - total_rank.get(n + 1, 0)
    logging.debug('Block (q=%s, parity=%s): HC %s, HH %s', weight, parity, hc, hh)
    return BlockDims(hc, norm_hc, hh)


def chain_maps(rs, trunc, max_hdeg):
    """Chain maps over a basis with the tensor lengths degrees up to max_hdeg need"""
    return ChainMaps(rs, GradedBasis(rs, trunc, min(trunc, max_hdeg + 2)))


def _all_blocks(rs, trunc, max_hdeg):
    maps = chain_maps(rs, trunc, max_hdeg)
    for q in range(1, trunc + 1):
        for parity in (0, 1):
            yield block_dims(maps, q, parity, max_hdeg)


def _collect(blocks, field):
    dims = {}
    for block in blocks:
        dims.update((slot, value) for slot, value in getattr(block, field).items() if value)
    return dims


def hc_dims(rs, trunc, max_hdeg):
    """{(n, q, sign): dim HC_n} from the Connes complex"""
    return _collect(_all_blocks(rs, trunc, max_hdeg), 'hc')


def norm_hc_dims(rs, trunc, max_hdeg):
    """{(n, q, sign): dim HC_n} from (ker(1 - t), b')"""
    return _collect(_all_blocks(rs, trunc, max_hdeg), 'norm_hc')


def hh_dims(rs, trunc, max_hdeg):
    """{(n, q, sign): dim HH_n}, the unit at (0, 0, 0) included"""
    dims = _collect(_all_blocks(rs, trunc, max_hdeg), 'hh')
    dims[(0, 0, 0)] = 1
    return dims


def table_from_blocks(blocks, presentation_hash, trunc, max_hdeg):
    """Assemble block results into a HomologyTable, checking that the two
    cyclic computations agree and that HH/HC dimensions add up
    """
    hc, hh = {}, {}
    for block in blocks:
        for slot, dimension in sorted(block.hc.items()):
            if block.norm_hc[slot] != dimension:
                raise OracleConsistencyError(
                    'HC at slot {} is {} from the Connes complex and {} through the norm map'
                    .format(slot, dimension, block.norm_hc[slot]), slot=slot)
        hc.update(block.hc)
        hh.update(block.hh)
    table = HomologyTable(presentation_hash, trunc, max_hdeg, hh, hc)
    report = bookkeeping_report(table)
    if not report.equal:
        slot, computed, expected = report.first_discrepancy
        raise OracleConsistencyError(
            'HH at slot {} is {} but HC bookkeeping gives {}'.format(slot, computed, expected),
            slot=slot)
    logging.info('Homology table for %s complete: %s HH and %s HC nonzero slots',
                 presentation_hash, len(table.hh), len(table.hc))
    return table


def homology_table(rs, trunc, max_hdeg, presentation_hash=None):
    return table_from_blocks(_all_blocks(rs, trunc, max_hdeg), presentation_hash,
                             trunc, max_hdeg)
