"""
Census of small multigraphs with maximum degree 3 and the gap check over it:
no circular chromatic index may fall strictly between 11/3 and 4.
"""

import os
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Tuple

import networkx as nx
from dotenv import load_dotenv
from tqdm import tqdm

from errors import InvalidParameters
from exact import chi_c_index
from multigraph import Multigraph, build, is_connected

load_dotenv()

WORKERS = int(os.getenv('CCI_WORKERS', str(os.cpu_count() or 1)))
CHUNKSIZE = int(os.getenv('CCI_CHUNKSIZE', '16'))

MAX_CENSUS_VERTICES = 8
MAX_MULTIPLICITY = 3
GAP_LOW = Fraction(11, 3)
GAP_HIGH = Fraction(4)


@dataclass
class GapReport:
    checked: int = 0
    values: Counter = field(default_factory=Counter)
    violations: List[Tuple[Multigraph, Fraction]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


# ============================================================================
# ENUMERATION
# ============================================================================

def _labelled(n: int, max_multiplicity: int) -> Iterator[Dict[Tuple[int, int], int]]:
    """
    Multiplicity maps over the pairs of 0..n-1 with every degree <= 3 and
    degrees non-increasing by label. Pairs are filled row by row, so vertex i
    is final once row i is done and the ordering can be pruned there.
    """
    pairs = list(combinations(range(n), 2))
    # index of the last pair touching vertex i (its row ends at (i, n-1))
    row_end = {pairs.index((i, n - 1)): i for i in range(n - 1)}
    degree = [0] * n
    chosen: Dict[Tuple[int, int], int] = {}

    def settled(i: int) -> bool:
        return degree[i] >= 1 and (i == 0 or degree[i] <= degree[i - 1])

    def walk(k: int) -> Iterator[Dict[Tuple[int, int], int]]:
        if k == len(pairs):
            if settled(n - 1):
                yield dict(chosen)
            return
        a, b = pairs[k]
        for mult in range(min(max_multiplicity, 3 - degree[a], 3 - degree[b]) + 1):
            degree[a] += mult
            degree[b] += mult
            chosen[(a, b)] = mult
            if k not in row_end or settled(row_end[k]):
                yield from walk(k + 1)
            degree[a] -= mult
            degree[b] -= mult
        del chosen[(a, b)]

    yield from walk(0)


def enumerate_multigraphs(max_vertices: int, max_multiplicity: int,
                          dedupe: bool = False) -> Iterator[Multigraph]:
    """
    Connected multigraphs with maximum degree 3 on 2..max_vertices vertices.
    Without `dedupe` isomorphic copies repeat; with it, a Weisfeiler-Lehman
    hash bucket plus an isomorphism test keeps one per class.
    """
    seen: Dict[str, List[nx.MultiGraph]] = {}
    for n in range(2, max_vertices + 1):
        for multiplicities in _labelled(n, max_multiplicity):
            edge_list = [pair for pair, mult in multiplicities.items() for _ in range(mult)]
            g = build(n, edge_list)
            if not is_connected(g):
                continue
            if dedupe:
                nxg = g.to_networkx()
                key = nx.weisfeiler_lehman_graph_hash(nx.Graph(nxg)) + f":{n}:{g.m}"
                bucket = seen.setdefault(key, [])
                if any(nx.is_isomorphic(nxg, other) for other in bucket):
                    continue
                bucket.append(nxg)
            yield g


# ============================================================================
# GAP CHECK
# ============================================================================

def _index_value(g: Multigraph) -> Fraction:
    value, _ = chi_c_index(g, limit=max(g.m, 1))
    return value


def gapcheck(
    max_vertices: int = MAX_CENSUS_VERTICES,
    max_multiplicity: int = MAX_MULTIPLICITY,
    workers: Optional[int] = None,
    dedupe: bool = False,
    progress: bool = False,
    chunksize: Optional[int] = None,
) -> GapReport:
    """
    Exact circular chromatic index of every enumerated graph; any value in
    the open interval (11/3, 4) is a violation. Results are consumed in
    enumeration order whatever the worker count.

    Raises:
        InvalidParameters: bounds outside 2..8 vertices or 1..3 multiplicity
    """
    if not 2 <= max_vertices <= MAX_CENSUS_VERTICES:
        raise InvalidParameters(f"max_vertices must be in 2..{MAX_CENSUS_VERTICES}, got {max_vertices}")
    if not 1 <= max_multiplicity <= MAX_MULTIPLICITY:
        raise InvalidParameters(f"max_multiplicity must be in 1..{MAX_MULTIPLICITY}, got {max_multiplicity}")

    graphs = list(enumerate_multigraphs(max_vertices, max_multiplicity, dedupe))
    workers = WORKERS if workers is None else workers
    report = GapReport()

    def consume(values) -> None:
        bar = tqdm(values, total=len(graphs), desc='gapcheck', unit='graph',
                   file=sys.stderr, disable=not progress)
        for g, value in zip(graphs, bar):
            report.checked += 1
            report.values[value] += 1
            if GAP_LOW < value < GAP_HIGH:
                report.violations.append((g, value))

    if workers <= 1:
        consume(map(_index_value, graphs))
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            consume(executor.map(_index_value, graphs, chunksize=chunksize or CHUNKSIZE))
    return report


__all__ = [
    'WORKERS',
    'CHUNKSIZE',
    'GAP_LOW',
    'GAP_HIGH',
    'GapReport',
    'enumerate_multigraphs',
    'gapcheck',
]
