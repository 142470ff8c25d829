"""Incremental community maintenance on weighted dynamic graphs.

The partition is seeded on the first snapshot by triangle-based static
detection, then maintained across snapshots by five update handlers
(node/edge removal, node/edge addition, edge weight change). Two weight
conditions drive all structural decisions:

  absorb:  INW(com, CC) >= IW(CC)        -- a weak component is merged
                                             into its dominant neighbour
  pairwise merge: INW(c1, c2) >= IW(c1) or INW(c1, c2) >= IW(c2)

where IW is the intra-community weight and INW the inter-community
weight of a pair of communities.
"""

from __future__ import annotations

from .graph import Edge, NodeId, SnapshotGraph, UpdateSet, apply_updates

CommunityId = int


class UnknownNode(Exception):
    pass


class ZeroDegree(Exception):
    """Weighted community-incidence is undefined for an isolated node."""


def weighted_degree(g: SnapshotGraph, n: NodeId) -> float:
    """WD: sum of the weights of edges incident to n."""
    if n not in g:
        raise UnknownNode(n)
    return sum(g.neighbors(n).values())


def weighted_incidence(g: SnapshotGraph, p: "Partition", n: NodeId,
                       c: CommunityId) -> float:
    """WI: fraction of n's weighted degree falling into community c."""
    wd = weighted_degree(g, n)
    if wd == 0:
        raise ZeroDegree(n)
    into = sum(w for nbr, w in g.neighbors(n).items()
               if p.membership.get(nbr) == c)
    return into / wd


class Partition:
    """Node-to-community assignment with exact IW / INW weight caches.

    membership and communities are mutually inverse; intra_weight[c] and
    inter_weight[(g,h)] (unordered pair, g < h) always match a from-scratch
    recomputation over the current graph. Treated as immutable between
    steps; handlers copy before mutating.
    """

    def __init__(self):
        self.membership: dict[NodeId, CommunityId] = {}
        self.communities: dict[CommunityId, set[NodeId]] = {}
        self.intra_weight: dict[CommunityId, float] = {}
        self.inter_weight: dict[tuple[CommunityId, CommunityId], float] = {}
        self._next_id: CommunityId = 0

    # -- construction -----------------------------------------------------

    @classmethod
    def from_membership(cls, g: SnapshotGraph, membership: dict[NodeId, CommunityId]) -> "Partition":
        p = cls()
        p.membership = dict(membership)
        for n, c in membership.items():
            p.communities.setdefault(c, set()).add(n)
        p.intra_weight = {c: 0.0 for c in p.communities}
        for a, b, w in g.edges():
            ca, cb = p.membership[a], p.membership[b]
            if ca == cb:
                p.intra_weight[ca] += w
            else:
                k = (ca, cb) if ca < cb else (cb, ca)
                p.inter_weight[k] = p.inter_weight.get(k, 0.0) + w
        p._next_id = max(p.communities, default=-1) + 1
        return p

    def copy(self) -> "Partition":
        p = Partition()
        p.membership = dict(self.membership)
        p.communities = {c: set(ns) for c, ns in self.communities.items()}
        p.intra_weight = dict(self.intra_weight)
        p.inter_weight = dict(self.inter_weight)
        p._next_id = self._next_id
        return p

    def fresh_id(self) -> CommunityId:
        cid = self._next_id
        self._next_id += 1
        return cid

    def community_count(self) -> int:
        return len(self.communities)

    # -- cache primitives ---------------------------------------------------

    def _pair(self, a: CommunityId, b: CommunityId):
        return (a, b) if a < b else (b, a)

    def inw(self, a: CommunityId, b: CommunityId) -> float:
        return self.inter_weight.get(self._pair(a, b), 0.0)

    def _inw_add(self, a: CommunityId, b: CommunityId, delta: float) -> None:
        k = self._pair(a, b)
        val = self.inter_weight.get(k, 0.0) + delta
        if val:
            self.inter_weight[k] = val
        else:
            self.inter_weight.pop(k, None)

    def neighbours_of(self, c: CommunityId):
        """Community ids sharing positive inter-weight with c."""
        out = []
        for (a, b), w in self.inter_weight.items():
            if w > 0:
                if a == c:
                    out.append(b)
                elif b == c:
                    out.append(a)
        return out

    def _drop_community(self, c: CommunityId) -> None:
        del self.communities[c]
        del self.intra_weight[c]
        for k in [k for k in self.inter_weight if c in k]:
            del self.inter_weight[k]

    def _recompute_community(self, g: SnapshotGraph, c: CommunityId) -> None:
        """Rebuild IW[c] and all INW(c, *) entries from the graph."""
        for k in [k for k in self.inter_weight if c in k]:
            del self.inter_weight[k]
        iw = 0.0
        for n in self.communities[c]:
            for nbr, w in g.neighbors(n).items():
                oc = self.membership[nbr]
                if oc == c:
                    iw += w / 2  # each intra edge seen from both ends
                else:
                    self._inw_add(c, oc, w)  # each crossing edge seen once
        self.intra_weight[c] = iw

    def merge(self, keep: CommunityId, absorb: CommunityId) -> CommunityId:
        """Merge community `absorb` into `keep`, updating caches exactly."""
        assert keep != absorb
        self.intra_weight[keep] += self.intra_weight[absorb] + self.inw(keep, absorb)
        self.inter_weight.pop(self._pair(keep, absorb), None)
        for k in [k for k in self.inter_weight if absorb in k]:
            other = k[0] if k[1] == absorb else k[1]
            w = self.inter_weight.pop(k)
            self._inw_add(keep, other, w)
        for n in self.communities[absorb]:
            self.membership[n] = keep
        self.communities[keep] |= self.communities[absorb]
        del self.communities[absorb]
        del self.intra_weight[absorb]
        return keep

    def validate(self, g: SnapshotGraph, tol: float = 1e-9) -> None:
        """Assert all partition invariants against the graph (test oracle)."""
        assert set(self.membership) == set(g.nodes), "membership not total"
        inv: dict[CommunityId, set] = {}
        for n, c in self.membership.items():
            inv.setdefault(c, set()).add(n)
        assert inv == self.communities, "membership/communities mismatch"
        assert all(ns for ns in self.communities.values()), "empty community"
        ref = Partition.from_membership(g, self.membership)
        for c in self.communities:
            assert abs(self.intra_weight[c] - ref.intra_weight[c]) <= tol, \
                f"IW[{c}] cache {self.intra_weight[c]} != {ref.intra_weight[c]}"
        mine = {k: v for k, v in self.inter_weight.items() if v}
        theirs = {k: v for k, v in ref.inter_weight.items() if v}
        assert set(mine) == set(theirs), "INW key sets differ"
        for k in mine:
            assert abs(mine[k] - theirs[k]) <= tol, f"INW[{k}] cache mismatch"
        total = sum(self.intra_weight.values()) + sum(mine.values())
        assert abs(total - g.total_weight()) <= tol, "weight accounting broken"


# -- merge machinery ---------------------------------------------------------


def _pairwise_merge_holds(p: Partition, c1: CommunityId, c2: CommunityId) -> bool:
    inw = p.inw(c1, c2)
    return inw >= p.intra_weight[c1] or inw >= p.intra_weight[c2]


def _merged_id(p: Partition, c1: CommunityId, c2: CommunityId) -> tuple[CommunityId, CommunityId]:
    """(keep, absorb): larger IW keeps its id, ties to the smaller id."""
    iw1, iw2 = p.intra_weight[c1], p.intra_weight[c2]
    if iw1 > iw2 or (iw1 == iw2 and c1 < c2):
        return c1, c2
    return c2, c1


def _cascade_pairwise(p: Partition, c: CommunityId) -> CommunityId:
    """Re-test c against its neighbours, merging while the pair condition
    holds; repeats on the merged community until no merge fires."""
    while True:
        candidates = [h for h in p.neighbours_of(c) if _pairwise_merge_holds(p, c, h)]
        if not candidates:
            return c
        # deterministic pick: greatest INW, then larger IW, then smaller id
        h = min(candidates, key=lambda x: (-p.inw(c, x), -p.intra_weight[x], x))
        keep, absorb = _merged_id(p, c, h)
        c = p.merge(keep, absorb)


def _absorb_if_weak(p: Partition, cc: CommunityId) -> CommunityId:
    """Absorb test for a (possibly fresh) community cc: if some adjacent
    community dominates it (INW >= IW_cc), merge cc into the one with the
    greatest INW; the merged community then cascades the pair test."""
    iw = p.intra_weight[cc]
    candidates = [(p.inw(cc, h), h) for h in p.neighbours_of(cc)]
    candidates = [(w, h) for w, h in candidates if w >= iw and w > 0]
    if not candidates:
        return cc
    _, best = min(candidates, key=lambda t: (-t[0], -p.intra_weight[t[1]], t[1]))
    keep, absorb = _merged_id(p, cc, best)
    merged = p.merge(keep, absorb)
    return _cascade_pairwise(p, merged)


def _components(g: SnapshotGraph, members: set[NodeId]) -> list[set[NodeId]]:
    """Connected components of the subgraph induced on `members`."""
    seen: set[NodeId] = set()
    comps = []
    for start in sorted(members):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        seen.add(start)
        while stack:
            n = stack.pop()
            for nbr in g.neighbors(n):
                if nbr in members and nbr not in seen:
                    seen.add(nbr)
                    comp.add(nbr)
                    stack.append(nbr)
        comps.append(comp)
    return comps


def _split_and_absorb(g: SnapshotGraph, p: Partition, c: CommunityId) -> None:
    """Re-derive community c: split into connected components (the largest
    IW component keeps c's id), then run the absorb test on each."""
    members = p.communities[c]
    comps = _components(g, members)
    if len(comps) == 1:
        _absorb_if_weak(p, c)
        return
    # assign ids: heaviest component inherits c, others get fresh ids
    def comp_iw(comp):
        return sum(w for n in comp for nbr, w in g.neighbors(n).items() if nbr in comp) / 2
    weights = [comp_iw(comp) for comp in comps]
    keep_idx = min(range(len(comps)),
                   key=lambda i: (-weights[i], min(comps[i])))
    ids = []
    for i, comp in enumerate(comps):
        cid = c if i == keep_idx else p.fresh_id()
        ids.append(cid)
        for n in comp:
            p.membership[n] = cid
        p.communities[cid] = set(comp)
        p.intra_weight.setdefault(cid, 0.0)
    for cid in ids:
        p._recompute_community(g, cid)
    # components are mutually disconnected inside c, so absorb tests are
    # independent; order by id for determinism
    for cid in sorted(ids):
        if cid in p.communities:
            _absorb_if_weak(p, cid)


# -- seeding (triangle-based static detection) --------------------------------


def seed_partition(g0: SnapshotGraph) -> Partition:
    """Static detection on the first snapshot: greedy triangle seeds in
    decreasing total-weight order, singletons for uncovered nodes, then
    iterated pairwise merging until stable."""
    order = {n: i for i, n in enumerate(sorted(g0.nodes))}
    triangles = []
    for a in g0.nodes:
        for b, wab in g0.neighbors(a).items():
            if order[b] <= order[a]:
                continue
            for c, wac in g0.neighbors(a).items():
                if order[c] <= order[b]:
                    continue
                if g0.has_edge(b, c):
                    w = wab + wac + g0.weight(b, c)
                    triangles.append((w, tuple(sorted((a, b, c)))))
    triangles.sort(key=lambda t: (-t[0], t[1]))

    membership: dict[NodeId, CommunityId] = {}
    next_id = 0
    for _, tri in triangles:
        if all(n not in membership for n in tri):
            for n in tri:
                membership[n] = next_id
            next_id += 1
    for n in sorted(g0.nodes):
        if n not in membership:
            membership[n] = next_id
            next_id += 1

    p = Partition.from_membership(g0, membership)
    while True:
        # merge the heaviest qualifying adjacency first; a weak community is
        # thereby absorbed by its dominant neighbour, not an arbitrary one
        best = None
        for (c1, c2), inw in p.inter_weight.items():
            if inw > 0 and _pairwise_merge_holds(p, c1, c2):
                key = (-inw, -max(p.intra_weight[c1], p.intra_weight[c2]), c1, c2)
                if best is None or key < best[0]:
                    best = (key, c1, c2)
        if best is None:
            return p
        _, c1, c2 = best
        keep, absorb = _merged_id(p, c1, c2)
        p.merge(keep, absorb)


# -- the five update handlers -------------------------------------------------


def node_removing(g_after: SnapshotGraph, p: Partition, old_node: NodeId,
                  c_old: CommunityId) -> Partition:
    """Handle removal of old_node (already deleted from g_after) from its
    community c_old: the remainder splits into components, each of which
    either stands alone or is absorbed by a dominant neighbour."""
    p = p.copy()
    p.communities[c_old].discard(old_node)
    p.membership.pop(old_node, None)
    if not p.communities[c_old]:
        p._drop_community(c_old)
        return p
    p._recompute_community(g_after, c_old)
    _split_and_absorb(g_after, p, c_old)
    return p


def edge_removing(g_after: SnapshotGraph, p: Partition, old_edge: Edge,
                  old_weight: float) -> Partition:
    """Handle removal of old_edge (already deleted from g_after)."""
    a, b = old_edge
    ca, cb = p.membership[a], p.membership[b]
    p = p.copy()
    if ca != cb:
        # inter-community edge: weights only become more community-like
        p._inw_add(ca, cb, -old_weight)
        return p
    p.intra_weight[ca] -= old_weight
    _split_and_absorb(g_after, p, ca)
    return p


def node_addition(g_after: SnapshotGraph, p: Partition, new_node: NodeId) -> Partition:
    """Handle addition of new_node (present in g_after with its edges)."""
    p = p.copy()
    nbrs = g_after.neighbors(new_node)
    if not nbrs:
        cid = p.fresh_id()
        p.membership[new_node] = cid
        p.communities[cid] = {new_node}
        p.intra_weight[cid] = 0.0
        return p
    wd = sum(nbrs.values())
    into: dict[CommunityId, float] = {}
    for nbr, w in nbrs.items():
        into[p.membership[nbr]] = into.get(p.membership[nbr], 0.0) + w
    # argmax WI; ties to the larger-IW community, then the smaller id
    target = min(into, key=lambda c: (-into[c] / wd, -p.intra_weight[c], c))
    p.membership[new_node] = target
    p.communities[target].add(new_node)
    p.intra_weight[target] += into[target]
    for c, w in into.items():
        if c != target:
            p._inw_add(target, c, w)
    _cascade_pairwise(p, target)
    return p


def edge_addition(g_after: SnapshotGraph, p: Partition,
                  new_edge: tuple[NodeId, NodeId, float]) -> Partition:
    """Handle addition of new_edge (present in g_after)."""
    a, b, w = new_edge
    ca, cb = p.membership[a], p.membership[b]
    p = p.copy()
    if ca == cb:
        p.intra_weight[ca] += w
        return p
    p._inw_add(ca, cb, w)
    if _pairwise_merge_holds(p, ca, cb):
        keep, absorb = _merged_id(p, ca, cb)
        merged = p.merge(keep, absorb)
        _cascade_pairwise(p, merged)
    return p


def edge_weight_updating(g_after: SnapshotGraph, p: Partition,
                         upd: tuple[NodeId, NodeId, float],
                         old_weight: float) -> Partition:
    """Handle a weight change on an existing edge."""
    a, b, new_weight = upd
    ca, cb = p.membership[a], p.membership[b]
    delta = new_weight - old_weight
    p = p.copy()
    if ca != cb:
        p._inw_add(ca, cb, delta)
        if delta > 0 and _pairwise_merge_holds(p, ca, cb):
            keep, absorb = _merged_id(p, ca, cb)
            merged = p.merge(keep, absorb)
            _cascade_pairwise(p, merged)
        return p
    p.intra_weight[ca] += delta
    if delta < 0:
        # weight loss: the community stays connected, so the absorb test
        # runs on the whole community
        _absorb_if_weak(p, ca)
    return p


def step(g_t: SnapshotGraph, p_t: Partition, u: UpdateSet) -> tuple[SnapshotGraph, Partition]:
    """One Dyci step: apply each update to the graph and dispatch its
    handler, in order: node removals, edge removals, node additions,
    edge additions, weight updates."""
    # validate the whole set up front so partial application cannot occur
    apply_updates(g_t, u)
    g = g_t.copy(t=g_t.t)
    p = p_t
    for n in u.node_to_remove:
        c_old = p.membership[n]
        g._remove_node(n)
        p = node_removing(g, p, n, c_old)
    for a, b in u.edge_to_remove:
        w = g.weight(a, b)
        g._remove_edge(a, b)
        p = edge_removing(g, p, (a, b), w)
    for n, incident in u.node_to_add:
        g._add_node(n)
        for nbr, w in incident:
            g._add_edge(n, nbr, w)
        p = node_addition(g, p, n)
    for a, b, w in u.edge_to_add:
        g._add_edge(a, b, w)
        p = edge_addition(g, p, (a, b, w))
    for a, b, w in u.edge_weight_update:
        old = g.weight(a, b)
        g._adj[a][b] = w
        g._adj[b][a] = w
        p = edge_weight_updating(g, p, (a, b, w), old)
    g.t = g_t.t + 1
    return g, p


def export_partition(p: Partition, path: str) -> None:
    """Write `nodeid,communityid` lines sorted by node id."""
    with open(path, "w", encoding="utf-8") as fh:
        for n in sorted(p.membership):
            fh.write(f"{n},{p.membership[n]}\n")
