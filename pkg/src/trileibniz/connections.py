"""Connections in the support: constrained walks over the grading group.

A connection from ``g`` to ``h`` is an odd-length chain
``g_1, ..., g_{2n+1}`` drawn from ``±S u {0}`` with ``g_1 = g``, whose
partial sums after odd positions lie in ``±S``, after even positions lie in
``±Sigma0``, and whose total is ``h`` or ``-h``.  For the plain relation
``S = Sigma1``; for J-connections ``S`` is ``Sigma1_J`` or ``Sigma1_J0``.

Search is breadth-first on the running sum, which is all acceptance and
future moves depend on.  :func:`oracle_connected` enumerates chains
literally and is kept independent of the search for testing.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .groups import GroupElement, symmetrize


class NotInSupport(ValueError):
    pass


@dataclass(frozen=True)
class ConnectionWitness:
    chain: tuple[GroupElement, ...]

    @property
    def odd_partials(self) -> tuple[GroupElement, ...]:
        return self._partials()[0::2]

    @property
    def even_partials(self) -> tuple[GroupElement, ...]:
        return self._partials()[1::2]

    @property
    def end(self) -> GroupElement:
        return self._partials()[-1]

    def _partials(self) -> list[GroupElement]:
        out = []
        acc = None
        for g in self.chain:
            acc = g if acc is None else acc + g
            out.append(acc)
        return out

    def __len__(self):
        return len(self.chain)

    def as_lists(self) -> dict:
        return {
            "chain": [x.flat() for x in self.chain],
            "odd_partials": [x.flat() for x in self.odd_partials],
            "even_partials": [x.flat() for x in self.even_partials],
        }


def is_connection(
    chain: Sequence[GroupElement],
    g: GroupElement,
    h: GroupElement,
    support: Iterable[GroupElement],
    sigma0: Iterable[GroupElement],
) -> bool:
    """Replay the three defining conditions on an explicit chain."""
    if not chain or len(chain) % 2 == 0:
        return False
    pm_s = symmetrize(support)
    pm_0 = symmetrize(sigma0)
    ident = g.spec.identity()
    if any(x not in pm_s and x != ident for x in chain):
        return False
    if chain[0] != g:
        return False
    total = None
    for pos, x in enumerate(chain, start=1):
        total = x if total is None else total + x
        if pos % 2 == 1 and total not in pm_s:
            return False
        if pos % 2 == 0 and total not in pm_0:
            return False
    return total == h or total == -h


def _search(g, h, support, sigma0) -> ConnectionWitness | None:
    pm_s = symmetrize(support)
    pm_0 = symmetrize(sigma0)
    targets = {h, -h}
    if g in targets:
        return ConnectionWitness((g,))
    steps = sorted(pm_s | {g.spec.identity()})
    parent: dict[GroupElement, tuple[GroupElement, GroupElement, GroupElement]] = {}
    seen = {g}
    queue = deque([g])
    while queue:
        x = queue.popleft()
        for a in steps:
            xa = x + a
            if xa not in pm_0:
                continue
            for b in steps:
                y = xa + b
                if y in seen or y not in pm_s:
                    continue
                seen.add(y)
                parent[y] = (x, a, b)
                if y in targets:
                    chain: list[GroupElement] = []
                    node = y
                    while node != g:
                        prev, a_, b_ = parent[node]
                        chain[:0] = [a_, b_]
                        node = prev
                    return ConnectionWitness((g, *chain))
                queue.append(y)
    return None


def connected(
    g: GroupElement,
    h: GroupElement,
    sigma1: Iterable[GroupElement],
    sigma0: Iterable[GroupElement],
) -> ConnectionWitness | None:
    """A shortest connection from ``g`` to ``h``, or ``None``."""
    sigma1 = frozenset(sigma1)
    for x in (g, h):
        if x not in sigma1:
            raise NotInSupport(f"{x} is not in the support")
    return _search(g, h, sigma1, frozenset(sigma0))


def j_connected(
    g: GroupElement,
    h: GroupElement,
    psi_support: Iterable[GroupElement],
    sigma0: Iterable[GroupElement],
) -> ConnectionWitness | None:
    """J-connection inside one part (``Sigma1_J`` or ``Sigma1_J0``) of the support."""
    psi_support = frozenset(psi_support)
    for x in (g, h):
        if x not in psi_support:
            raise NotInSupport(f"{x} is not in the selected part of the support")
    return _search(g, h, psi_support, frozenset(sigma0))


def oracle_connected(
    g: GroupElement,
    h: GroupElement,
    support: Iterable[GroupElement],
    sigma0: Iterable[GroupElement],
    max_len: int,
) -> bool:
    """Enumerate every chain of odd length <= ``max_len`` and replay it.

    Prefixes that already break a partial-sum condition are abandoned;
    the conditions only concern prefixes, so nothing reachable is lost.
    """
    if max_len < 1 or max_len % 2 == 0:
        raise ValueError("max_len must be odd and >= 1")
    support = frozenset(support)
    sigma0 = frozenset(sigma0)
    pm_s = symmetrize(support)
    pm_0 = symmetrize(sigma0)
    alphabet = sorted(pm_s | {g.spec.identity()})

    def extend(chain: list, total) -> bool:
        if len(chain) % 2 == 1 and is_connection(chain, g, h, support, sigma0):
            return True
        if len(chain) + 2 > max_len:
            return False
        for a in alphabet:
            if total + a not in pm_0:
                continue
            for b in alphabet:
                if total + a + b not in pm_s:
                    continue
                if extend(chain + [a, b], total + a + b):
                    return True
        return False

    if g not in pm_s:
        return False
    return extend([g], g)


def oracle_endpoints(
    g: GroupElement,
    support: Iterable[GroupElement],
    sigma0: Iterable[GroupElement],
    max_len: int,
) -> frozenset[GroupElement]:
    """Every ``h`` in ``support`` reached from ``g`` by a literal chain of odd
    length <= ``max_len``; each new endpoint is confirmed by replaying its chain."""
    if max_len < 1 or max_len % 2 == 0:
        raise ValueError("max_len must be odd and >= 1")
    support = frozenset(support)
    sigma0 = frozenset(sigma0)
    pm_s = symmetrize(support)
    pm_0 = symmetrize(sigma0)
    alphabet = sorted(pm_s | {g.spec.identity()})
    found: set[GroupElement] = set()

    def visit(chain: list, total) -> None:
        for h in (total, -total):
            if h in support and h not in found and is_connection(chain, g, h, support, sigma0):
                found.add(h)
        if len(chain) + 2 > max_len:
            return
        for a in alphabet:
            if total + a not in pm_0:
                continue
            for b in alphabet:
                if total + a + b in pm_s:
                    visit(chain + [a, b], total + a + b)

    if g in pm_s:
        visit([g], g)
    return frozenset(found)


@dataclass(frozen=True)
class ConnectionClasses:
    classes: tuple[tuple[GroupElement, ...], ...]
    witnesses: dict

    @property
    def representatives(self) -> tuple[GroupElement, ...]:
        return tuple(c[0] for c in self.classes)

    def class_of(self, g: GroupElement) -> tuple[GroupElement, ...]:
        for c in self.classes:
            if g in c:
                return c
        raise NotInSupport(f"{g} is not in the support")

    def __len__(self):
        return len(self.classes)


def _classes(support, sigma0, search) -> ConnectionClasses:
    remaining = sorted(support)
    classes = []
    witnesses = {}
    while remaining:
        rep = remaining[0]
        members = []
        for x in remaining:
            w = search(rep, x)
            if w is not None:
                members.append(x)
                witnesses[x] = w
        classes.append(tuple(members))
        remaining = [x for x in remaining if x not in set(members)]
    return ConnectionClasses(tuple(classes), witnesses)


def connection_classes(sigma1: Iterable[GroupElement], sigma0: Iterable[GroupElement]) -> ConnectionClasses:
    sigma1 = frozenset(sigma1)
    sigma0 = frozenset(sigma0)
    return _classes(sigma1, sigma0, lambda a, b: _search(a, b, sigma1, sigma0))


def j_connection_classes(psi_support: Iterable[GroupElement], sigma0: Iterable[GroupElement]) -> ConnectionClasses:
    psi_support = frozenset(psi_support)
    sigma0 = frozenset(sigma0)
    return _classes(psi_support, sigma0, lambda a, b: _search(a, b, psi_support, sigma0))
