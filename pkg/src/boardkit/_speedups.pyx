# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled game kernels: move generation, playouts and the search recursion.

A kernel is built from a game's rule tables and works on flat state
vectors (``occupancy bytes + player to move + aux counter``). It mirrors
the pure-Python rules exactly: identical canonical move order, identical
terminal logic and an identical splitmix64 RNG, so playout and search
results are bit-identical to the fallback path.

All workspaces are allocated per call, so one kernel instance may be used
from several threads at once.
"""

from libc.stdint cimport int8_t, int16_t, int32_t, uint64_t
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy
from posix.time cimport CLOCK_MONOTONIC, clock_gettime, timespec

import numpy as np

cdef enum:
    MREC = 28            # int16 slots per move record
    HOP_CAP = 12
    ARENA_SLOTS = 65536  # move records shared along one search path
    PLAYOUT_SLOTS = 2048 # move records for a single playout step
    MAX_LEVELS = 160

cdef enum:
    K_INSERT = 0
    K_STEP = 1
    K_JUMP = 2
    K_PASS = 3

cdef enum:
    F_INSERT = 0
    F_MOVE = 1
    F_CAPTURE = 2
    F_REVERSI = 3

ctypedef struct KInfo:
    int family
    int n
    int quota
    int forced
    int multi
    int stuck_draw
    int max_hops
    int32_t* adj_start
    int32_t* adj
    int32_t* jump_start
    int32_t* jump_over
    int32_t* jump_to
    int n_lines
    int32_t* line_start
    int32_t* line_pos
    int n_t1
    int n_t2
    int32_t* t1
    int32_t* t2
    int has_rays
    int32_t* ray_start
    int32_t* ray_pos


# -- rng: splitmix64, identical to the Python implementation ---------------

cdef inline uint64_t rng_next(uint64_t* s) noexcept nogil:
    s[0] = s[0] + <uint64_t> 0x9E3779B97F4A7C15
    cdef uint64_t z = s[0]
    z = (z ^ (z >> 30)) * <uint64_t> 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * <uint64_t> 0x94D049BB133111EB
    return z ^ (z >> 31)


cdef inline int rand_below(uint64_t* s, int n) noexcept nogil:
    return <int> (rng_next(s) % <uint64_t> n)


cdef inline double now_s() noexcept nogil:
    cdef timespec ts
    clock_gettime(CLOCK_MONOTONIC, &ts)
    return ts.tv_sec + ts.tv_nsec * 1e-9


# -- move generation -------------------------------------------------------

cdef int gen_inserts(KInfo* k, int8_t* vec, int16_t* out, int cap) noexcept nogil:
    cdef int i, count = 0
    cdef int16_t* rec
    for i in range(k.n):
        if vec[i] == 0:
            if count >= cap:
                return -1
            rec = out + count * MREC
            rec[0] = K_INSERT; rec[1] = i; rec[2] = -1; rec[3] = 0
            count += 1
    return count


cdef int gen_steps(KInfo* k, int8_t* vec, int16_t* out, int cap, int me) noexcept nogil:
    cdef int frm, j, to, count = 0
    cdef int16_t* rec
    for frm in range(k.n):
        if vec[frm] != me:
            continue
        for j in range(k.adj_start[frm], k.adj_start[frm + 1]):
            to = k.adj[j]
            if vec[to] == 0:
                if count >= cap:
                    return -1
                rec = out + count * MREC
                rec[0] = K_STEP; rec[1] = frm; rec[2] = to; rec[3] = 0
                count += 1
    return count


cdef int jump_dfs(KInfo* k, int8_t* vec, int16_t* out, int cap, int me, int opp,
                  int frm, int cur, int16_t* hops, int nhops, int count) noexcept nogil:
    """Emit capture chains from ``cur`` in pre-order; mirrors the pure DFS."""
    cdef int j, over, to, h
    cdef int16_t* rec
    for j in range(k.jump_start[cur], k.jump_start[cur + 1]):
        over = k.jump_over[j]
        to = k.jump_to[j]
        if vec[over] == opp and vec[to] == 0:
            hops[2 * nhops] = <int16_t> over
            hops[2 * nhops + 1] = <int16_t> to
            if count >= cap:
                return -1
            rec = out + count * MREC
            rec[0] = K_JUMP; rec[1] = frm; rec[2] = -1; rec[3] = nhops + 1
            for h in range(2 * (nhops + 1)):
                rec[4 + h] = hops[h]
            count += 1
            if k.multi and nhops + 1 < k.max_hops:
                vec[cur] = 0; vec[over] = 0; vec[to] = <int8_t> me
                count = jump_dfs(k, vec, out, cap, me, opp, frm, to, hops, nhops + 1, count)
                vec[cur] = <int8_t> me; vec[over] = <int8_t> opp; vec[to] = 0
                if count < 0:
                    return -1
    return count


cdef int gen_jumps(KInfo* k, int8_t* vec, int16_t* out, int cap, int me, int opp,
                   int count) noexcept nogil:
    cdef int frm
    cdef int16_t hops[2 * HOP_CAP]
    for frm in range(k.n):
        if vec[frm] == me:
            count = jump_dfs(k, vec, out, cap, me, opp, frm, frm, hops, 0, count)
            if count < 0:
                return -1
    return count


cdef int reversi_flanks(KInfo* k, int8_t* vec, int pos, int me, int opp) noexcept nogil:
    cdef int d, j, q, run, base
    for d in range(8):
        base = pos * 8 + d
        run = 0
        for j in range(k.ray_start[base], k.ray_start[base + 1]):
            q = k.ray_pos[j]
            if vec[q] == opp:
                run += 1
            else:
                if vec[q] == me and run > 0:
                    return 1
                break
    return 0


cdef int gen_reversi(KInfo* k, int8_t* vec, int16_t* out, int cap, int me, int opp) noexcept nogil:
    cdef int pos, count = 0
    cdef int16_t* rec
    for pos in range(k.n):
        if vec[pos] == 0 and reversi_flanks(k, vec, pos, me, opp):
            if count >= cap:
                return -1
            rec = out + count * MREC
            rec[0] = K_INSERT; rec[1] = pos; rec[2] = -1; rec[3] = 0
            count += 1
    if count == 0:
        if cap < 1:
            return -1
        out[0] = K_PASS; out[1] = -1; out[2] = -1; out[3] = 0
        return 1
    return count


cdef int gen_moves(KInfo* k, int8_t* vec, int16_t* out, int cap) noexcept nogil:
    """All legal moves in canonical order; -1 on workspace overflow."""
    cdef int me = vec[k.n]
    cdef int opp = 3 - me
    cdef int count, placed, i
    if k.family == F_INSERT:
        return gen_inserts(k, vec, out, cap)
    if k.family == F_MOVE:
        if k.quota > 0:
            placed = 0
            for i in range(k.n):
                if vec[i] != 0:
                    placed += 1
            if placed < 2 * k.quota:
                return gen_inserts(k, vec, out, cap)
        return gen_steps(k, vec, out, cap, me)
    if k.family == F_CAPTURE:
        if k.forced:
            count = gen_jumps(k, vec, out, cap, me, opp, 0)
            if count != 0:          # captures found (or overflow)
                return count
            return gen_steps(k, vec, out, cap, me)
        count = gen_steps(k, vec, out, cap, me)
        if count < 0:
            return -1
        return gen_jumps(k, vec, out, cap, me, opp, count)
    return gen_reversi(k, vec, out, cap, me, opp)


# -- transitions and terminal values ---------------------------------------

cdef void apply_move(KInfo* k, int8_t* vec, int16_t* rec) noexcept nogil:
    cdef int me = vec[k.n]
    cdef int opp = 3 - me
    cdef int kind = rec[0]
    cdef int i, cur, base, d, j, q, run, pos
    if kind == K_INSERT:
        pos = rec[1]
        vec[pos] = <int8_t> me
        if k.family == F_REVERSI:
            for d in range(8):
                base = pos * 8 + d
                run = 0
                for j in range(k.ray_start[base], k.ray_start[base + 1]):
                    q = k.ray_pos[j]
                    if vec[q] == opp:
                        run += 1
                    else:
                        if vec[q] == me and run > 0:
                            for i in range(k.ray_start[base], j):
                                vec[k.ray_pos[i]] = <int8_t> me
                        break
            vec[k.n + 1] = 0
    elif kind == K_STEP:
        vec[rec[2]] = vec[rec[1]]
        vec[rec[1]] = 0
    elif kind == K_JUMP:
        cur = rec[1]
        vec[cur] = 0
        for i in range(rec[3]):
            vec[rec[4 + 2 * i]] = 0
            cur = rec[5 + 2 * i]
        vec[cur] = <int8_t> me
    else:
        vec[k.n + 1] += 1
    vec[k.n] = <int8_t> (3 - me)


cdef double win_value(KInfo* k, int8_t* vec, int persp) noexcept nogil:
    """Value for ``persp`` if a win condition holds in ``vec``, else -1."""
    cdef int i, j, l, first, ok, c1, c2, full
    if k.family == F_REVERSI:
        full = 1
        for i in range(k.n):
            if vec[i] == 0:
                full = 0
                break
        if full == 0 and vec[k.n + 1] < 2:
            return -1.0
        c1 = 0; c2 = 0
        for i in range(k.n):
            if vec[i] == 1:
                c1 += 1
            elif vec[i] == 2:
                c2 += 1
        if c1 == c2:
            return 0.5
        if c1 > c2:
            return 1.0 if persp == 1 else 0.0
        return 1.0 if persp == 2 else 0.0
    if k.family == F_CAPTURE:
        c1 = 0; c2 = 0
        for i in range(k.n):
            if vec[i] == 1:
                c1 += 1
            elif vec[i] == 2:
                c2 += 1
        if c2 == 0:
            return 1.0 if persp == 1 else 0.0
        if c1 == 0:
            return 1.0 if persp == 2 else 0.0
        return -1.0
    for l in range(k.n_lines):
        first = vec[k.line_pos[k.line_start[l]]]
        if first == 0:
            continue
        ok = 1
        for j in range(k.line_start[l] + 1, k.line_start[l + 1]):
            if vec[k.line_pos[j]] != first:
                ok = 0
                break
        if ok:
            return 1.0 if first == persp else 0.0
    if k.n_t1 > 0:
        ok = 1
        for i in range(k.n_t1):
            if vec[k.t1[i]] != 1:
                ok = 0
                break
        if ok:
            return 1.0 if persp == 1 else 0.0
        ok = 1
        for i in range(k.n_t2):
            if vec[k.t2[i]] != 2:
                ok = 0
                break
        if ok:
            return 1.0 if persp == 2 else 0.0
    return -1.0


cdef inline double stuck_value(KInfo* k, int8_t* vec, int persp) noexcept nogil:
    """Value when the player to move has no moves (loss, or draw for insert games)."""
    if k.stuck_draw:
        return 0.5
    return 0.0 if vec[k.n] == persp else 1.0


# -- playout and search ----------------------------------------------------

cdef double playout_c(KInfo* k, int8_t* vec, int max_depth, int persp,
                      uint64_t* rng, int16_t* arena, int cap) noexcept nogil:
    """Uniform random playout; -2 signals workspace overflow."""
    cdef int plies = 0, nmoves
    cdef double w
    while True:
        w = win_value(k, vec, persp)
        if w >= 0.0:
            return w
        nmoves = gen_moves(k, vec, arena, cap)
        if nmoves < 0:
            return -2.0
        if nmoves == 0:
            return stuck_value(k, vec, persp)
        if plies >= max_depth:
            return 0.5
        apply_move(k, vec, arena + rand_below(rng, nmoves) * MREC)
        plies += 1


cdef double search_c(KInfo* k, int8_t* vec, int depth, double alpha, double beta,
                     int persp, int playouts, int max_pd, uint64_t* rng,
                     int16_t* arena, int used, int8_t* stack, int level,
                     double deadline, int* status) noexcept nogil:
    """Alpha-beta minimax on state vectors; status 1 = deadline, 2 = capacity."""
    cdef double w = win_value(k, vec, persp)
    if w >= 0.0:
        return w
    cdef int nmoves = gen_moves(k, vec, arena + used * MREC, ARENA_SLOTS - used)
    if nmoves < 0:
        status[0] = 2
        return 0.0
    if nmoves == 0:
        return stuck_value(k, vec, persp)
    cdef int16_t* moves = arena + used * MREC
    cdef int next_used = used + nmoves
    cdef int stride = k.n + 2
    cdef int8_t* child = stack + level * stride
    cdef int me = vec[k.n]
    cdef double total, u, v
    cdef int i
    if depth == 0:
        total = 0.0
        for i in range(playouts):
            if deadline > 0.0 and now_s() >= deadline:
                status[0] = 1
                return 0.0
            memcpy(child, vec, stride)
            v = playout_c(k, child, max_pd, persp, rng,
                          arena + next_used * MREC, ARENA_SLOTS - next_used)
            if v < 0.0:
                status[0] = 2
                return 0.0
            total += v
        return total / playouts
    if deadline > 0.0 and now_s() >= deadline:
        status[0] = 1
        return 0.0
    if level + 1 >= MAX_LEVELS:
        status[0] = 2
        return 0.0
    if me == persp:
        u = -1.0
        for i in range(nmoves):
            memcpy(child, vec, stride)
            apply_move(k, child, moves + i * MREC)
            v = search_c(k, child, depth - 1, alpha, beta, persp, playouts,
                         max_pd, rng, arena, next_used, stack, level + 1,
                         deadline, status)
            if status[0] != 0:
                return 0.0
            if v > u:
                u = v
            if u >= beta:
                break
            if u > alpha:
                alpha = u
        return u
    u = 2.0
    for i in range(nmoves):
        memcpy(child, vec, stride)
        apply_move(k, child, moves + i * MREC)
        v = search_c(k, child, depth - 1, alpha, beta, persp, playouts,
                     max_pd, rng, arena, next_used, stack, level + 1,
                     deadline, status)
        if status[0] != 0:
            return 0.0
        if v < u:
            u = v
        if u <= alpha:
            break
        if u < beta:
            beta = u
    return u


# -- Python-facing kernel object -------------------------------------------

cdef int32_t* _copy_i32(object arr) except NULL:
    data = np.ascontiguousarray(arr, dtype=np.int32)
    cdef int32_t[::1] view = data
    cdef Py_ssize_t size = view.shape[0]
    cdef int32_t* buf = <int32_t*> malloc((size if size else 1) * sizeof(int32_t))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(size):
        buf[i] = view[i]
    return buf


cdef class Kernel:
    """Compiled rules of one game, built from its kernel tables."""

    cdef KInfo k

    def __cinit__(self, tables):
        self.k.family = tables.family
        self.k.n = tables.n
        self.k.quota = tables.quota
        self.k.forced = tables.forced_capture
        self.k.multi = tables.multi_capture
        self.k.stuck_draw = tables.stuck_draw
        self.k.max_hops = min(tables.max_hops, HOP_CAP)
        self.k.adj_start = _copy_i32(tables.adj_start)
        self.k.adj = _copy_i32(tables.adj)
        self.k.jump_start = _copy_i32(tables.jump_start)
        self.k.jump_over = _copy_i32(tables.jump_over)
        self.k.jump_to = _copy_i32(tables.jump_to)
        self.k.n_lines = len(tables.line_start) - 1
        self.k.line_start = _copy_i32(tables.line_start)
        self.k.line_pos = _copy_i32(tables.line_pos)
        self.k.n_t1 = len(tables.target_p1)
        self.k.n_t2 = len(tables.target_p2)
        self.k.t1 = _copy_i32(tables.target_p1)
        self.k.t2 = _copy_i32(tables.target_p2)
        self.k.has_rays = len(tables.ray_pos) > 0
        self.k.ray_start = _copy_i32(tables.ray_start)
        self.k.ray_pos = _copy_i32(tables.ray_pos)
        if self.k.family == F_REVERSI and not self.k.has_rays:
            raise ValueError("reversi tables need rays")
        if self.k.n < 1 or self.k.n > 255:
            raise ValueError("kernel supports 1..255 positions")

    def __dealloc__(self):
        free(self.k.adj_start); free(self.k.adj)
        free(self.k.jump_start); free(self.k.jump_over); free(self.k.jump_to)
        free(self.k.line_start); free(self.k.line_pos)
        free(self.k.t1); free(self.k.t2)
        free(self.k.ray_start); free(self.k.ray_pos)

    cdef int _load(self, bytes vec, int8_t* buf) except -1:
        cdef int stride = self.k.n + 2
        if len(vec) != stride:
            raise ValueError(f"state vector must have {stride} bytes")
        memcpy(buf, <const char*> vec, stride)
        return 0

    def moves(self, bytes vec):
        """Canonical move tuples (kind, pos/frm, to, hops) for parity tests."""
        cdef int stride = self.k.n + 2
        cdef int8_t* state = <int8_t*> malloc(stride)
        cdef int16_t* arena = <int16_t*> malloc(PLAYOUT_SLOTS * MREC * sizeof(int16_t))
        cdef int16_t* rec
        cdef int n, i, h
        if state == NULL or arena == NULL:
            free(state); free(arena)
            raise MemoryError()
        try:
            self._load(vec, state)
            n = gen_moves(&self.k, state, arena, PLAYOUT_SLOTS)
            if n < 0:
                raise RuntimeError("kernel move workspace exceeded")
            out = []
            for i in range(n):
                rec = arena + i * MREC
                hops = []
                for h in range(rec[3]):
                    hops.append((rec[4 + 2 * h], rec[5 + 2 * h]))
                out.append((rec[0], rec[1], rec[2], tuple(hops)))
            return out
        finally:
            free(state); free(arena)

    def apply(self, bytes vec, int index):
        """Apply the ``index``-th canonical move; returns the new vector."""
        cdef int stride = self.k.n + 2
        cdef int8_t* state = <int8_t*> malloc(stride)
        cdef int16_t* arena = <int16_t*> malloc(PLAYOUT_SLOTS * MREC * sizeof(int16_t))
        if state == NULL or arena == NULL:
            free(state); free(arena)
            raise MemoryError()
        try:
            self._load(vec, state)
            n = gen_moves(&self.k, state, arena, PLAYOUT_SLOTS)
            if n < 0:
                raise RuntimeError("kernel move workspace exceeded")
            if not 0 <= index < n:
                raise IndexError(f"move index {index} out of range({n})")
            apply_move(&self.k, state, arena + index * MREC)
            return (<char*> state)[:stride]
        finally:
            free(state); free(arena)

    def terminal_value(self, bytes vec, int perspective):
        """Terminal value for ``perspective``, or None if non-terminal."""
        cdef int stride = self.k.n + 2
        cdef int8_t * state = <int8_t*> malloc(stride)
        cdef int16_t* arena = <int16_t*> malloc(PLAYOUT_SLOTS * MREC * sizeof(int16_t))
        if state == NULL or arena == NULL:
            free(state); free(arena)
            raise MemoryError()
        try:
            self._load(vec, state)
            w = win_value(&self.k, state, perspective)
            if w >= 0.0:
                return w
            n = gen_moves(&self.k, state, arena, PLAYOUT_SLOTS)
            if n < 0:
                raise RuntimeError("kernel move workspace exceeded")
            if n == 0:
                return stuck_value(&self.k, state, perspective)
            return None
        finally:
            free(state); free(arena)

    def playout(self, bytes vec, int max_depth, int perspective, rng_state):
        """One uniform playout; returns (value, new rng state)."""
        cdef int stride = self.k.n + 2
        cdef uint64_t rng = <uint64_t> (<object> rng_state & 0xFFFFFFFFFFFFFFFF)
        cdef int8_t* state = <int8_t*> malloc(stride)
        cdef int16_t* arena = <int16_t*> malloc(PLAYOUT_SLOTS * MREC * sizeof(int16_t))
        cdef double value
        if state == NULL or arena == NULL:
            free(state); free(arena)
            raise MemoryError()
        try:
            self._load(vec, state)
            with nogil:
                value = playout_c(&self.k, state, max_depth, perspective,
                                  &rng, arena, PLAYOUT_SLOTS)
            if value < 0.0:
                raise RuntimeError("kernel move workspace exceeded")
            return value, int(rng)
        finally:
            free(state); free(arena)

    def search(self, bytes vec, int depth, double alpha, double beta,
               int perspective, int playouts, int max_playout_depth,
               rng_state, double time_limit=-1.0):
        """One alpha-beta evaluation; returns (value or None, new rng state)."""
        values, rng = self.sweep([vec], depth, perspective, playouts,
                                 max_playout_depth, rng_state, time_limit,
                                 alpha, beta)
        return (None if values is None else values[0]), rng

    def sweep(self, list vecs, int depth, int perspective, int playouts,
              int max_playout_depth, rng_state, double time_limit=-1.0,
              double alpha=0.0, double beta=1.0):
        """Evaluate each vector at ``depth``; returns (values or None, rng).

        ``time_limit`` < 0 disables the deadline; when the deadline is hit
        the whole sweep is abandoned and None is returned for the values.
        """
        cdef int stride = self.k.n + 2
        cdef uint64_t rng = <uint64_t> (<object> rng_state & 0xFFFFFFFFFFFFFFFF)
        cdef double deadline = 0.0
        if time_limit >= 0.0:
            deadline = now_s() + time_limit
        if depth < 0:
            raise ValueError("depth must be >= 0")
        if playouts < 1:
            raise ValueError("playouts must be >= 1")
        cdef int8_t* root = <int8_t*> malloc(stride)
        cdef int8_t* stack = <int8_t*> malloc(MAX_LEVELS * stride)
        cdef int16_t* arena = <int16_t*> malloc(ARENA_SLOTS * MREC * sizeof(int16_t))
        if root == NULL or stack == NULL or arena == NULL:
            free(root); free(stack); free(arena)
            raise MemoryError()
        cdef int status = 0
        cdef double value
        values = []
        try:
            for vec in vecs:
                self._load(vec, root)
                with nogil:
                    value = search_c(&self.k, root, depth, alpha, beta,
                                     perspective, playouts, max_playout_depth,
                                     &rng, arena, 0, stack, 0, deadline, &status)
                if status == 1:
                    return None, int(rng)
                if status == 2:
                    raise RuntimeError("kernel search workspace exceeded")
                values.append(value)
            return values, int(rng)
        finally:
            free(root); free(stack); free(arena)
