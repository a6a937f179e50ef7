"""
Mutable rotation system used while a construction is in progress.

Local surgery (subdividing an edge, inserting a chord or a pendant edge, deleting an edge) costs O(1) plus the
length of the faces it walks. `edits` counts elementary link/unlink steps so callers can check that a
construction stays linear in its output.
"""

from selfdual.errors import VertexNotOnFace
from selfdual.planar_map.dart_map import PlanarMap


class MapBuilder:
    def __init__(self, m: PlanarMap) -> None:
        self.tails: list[int] = list(m.tails)
        self.nxt: list[int] = list(m.rotation)
        self.prv: list[int] = [0] * m.num_darts
        for d, e in enumerate(m.rotation):
            self.prv[e] = d
        self.alive: list[bool] = [True] * m.num_darts
        self.anchor: list[int] = list(m.anchors)
        self.labels: list[str] | None = list(m.labels) if m.labels is not None else None
        self.edits = 0

    @property
    def num_vertices(self) -> int:
        return len(self.anchor)

    # ------------------------------------------------------------------ queries

    def head(self, d: int) -> int:
        return self.tails[d ^ 1]

    def phi(self, d: int) -> int:
        return self.nxt[d ^ 1]

    def darts_at(self, v: int) -> list[int]:
        start = self.anchor[v]
        out = [start]
        d = self.nxt[start]
        while d != start:
            out.append(d)
            d = self.nxt[d]
        return out

    def find_dart(self, u: int, v: int) -> int | None:
        for d in self.darts_at(u):
            if self.head(d) == v:
                return d
        return None

    def face_darts(self, d: int) -> list[int]:
        out = [d]
        x = self.phi(d)
        while x != d:
            out.append(x)
            x = self.phi(x)
        return out

    def face_vertices(self, d: int) -> list[int]:
        return [self.tails[x] for x in self.face_darts(d)]

    def corner(self, face_dart: int, v: int) -> int:
        """Dart after which a new dart at v would open into the face of `face_dart`."""
        for x in self.face_darts(face_dart):
            if self.tails[x] == v:
                return self.prv[x]
        raise VertexNotOnFace(f"vertex {v} is not on the face of dart {face_dart}")

    # ------------------------------------------------------------------ edits

    def add_vertex(self, label: str | None = None) -> int:
        v = len(self.anchor)
        self.anchor.append(-1)
        if self.labels is not None:
            self.labels.append(label if label is not None else str(v))
        return v

    def _new_pair(self, u: int, v: int) -> int:
        d = len(self.tails)
        self.tails.extend((u, v))
        self.nxt.extend((d, d + 1))
        self.prv.extend((d, d + 1))
        self.alive.extend((True, True))
        return d

    def _link_after(self, x: int, d: int) -> None:
        y = self.nxt[x]
        self.nxt[x] = d
        self.prv[d] = x
        self.nxt[d] = y
        self.prv[y] = d
        self.edits += 1

    def _unlink(self, d: int) -> None:
        v = self.tails[d]
        p, n = self.prv[d], self.nxt[d]
        self.nxt[p] = n
        self.prv[n] = p
        if self.anchor[v] == d:
            self.anchor[v] = n if n != d else -1
        self.alive[d] = False
        self.edits += 1

    def _place(self, after: int | None, d: int) -> None:
        v = self.tails[d]
        if after is None:
            self.nxt[d] = self.prv[d] = d
            self.anchor[v] = d
            self.edits += 1
        else:
            self._link_after(after, d)

    def add_edge(self, after_u: int, after_v: int) -> int:
        """New edge between the corner after dart `after_u` and the corner after dart `after_v`; returns u->v."""
        d = self._new_pair(self.tails[after_u], self.tails[after_v])
        self._link_after(after_u, d)
        self._link_after(after_v, d ^ 1)
        return d

    def add_pendant(self, after_u: int, w: int | None = None, label: str | None = None) -> int:
        """Hang vertex w (a new one unless an isolated vertex is given) from the corner after `after_u`.

        Returns the dart towards w.
        """
        if w is None:
            w = self.add_vertex(label)
        d = self._new_pair(self.tails[after_u], w)
        self._link_after(after_u, d)
        self._place(None, d ^ 1)
        return d

    def remove_edge(self, d: int) -> None:
        self._unlink(d)
        self._unlink(d ^ 1)

    def subdivide(self, d: int, label: str | None = None) -> int:
        """Put a new vertex w in the middle of edge d = p->q; afterwards d is p->w. Returns w."""
        q = self.tails[d ^ 1]
        w = self.add_vertex(label)
        n = self._new_pair(w, q)  # n: w->q, n^1: q->w
        # n^1 takes the place of d^1 in the rotation at q
        self._link_after(d ^ 1, n ^ 1)
        self._unlink(d ^ 1)
        self.alive[d ^ 1] = True
        self.tails[d ^ 1] = w
        self._place(None, d ^ 1)
        self._link_after(d ^ 1, n)
        return w

    # ------------------------------------------------------------------ output

    def freeze(self) -> PlanarMap:
        """Compact live darts into an immutable, Euler-checked map."""
        new_id = [-1] * len(self.tails)
        k = 0
        for d in range(0, len(self.tails), 2):
            if self.alive[d]:
                new_id[d], new_id[d + 1] = k, k + 1
                k += 2
        tails = [0] * k
        rotation = [0] * k
        for d, nd in enumerate(new_id):
            if nd >= 0:
                tails[nd] = self.tails[d]
                rotation[nd] = new_id[self.nxt[d]]
        return PlanarMap(tuple(tails), tuple(rotation), tuple(self.labels) if self.labels is not None else None)
