# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``prefixcode._kernel_py.run_merges``.

Weights stay Python ints (arbitrary precision, exact comparisons); only the
loop, the binary search, and the bookkeeping are compiled.  Results must be
bit-identical to the pure kernel.
"""


def run_merges(nums, bint record_states=False):
    cdef Py_ssize_t n = len(nums)
    if n < 2:
        raise ValueError("need at least two weights")
    cdef list vals = list(nums)
    cdef list ids = list(range(n))
    cdef list parents = [0] * (2 * n - 1)
    cdef list ks = []
    cdef list sums = []
    states = [] if record_states else None
    cdef Py_ssize_t m, lo, hi, mid, nid, ai, bi
    cdef object a, b, s
    for m in range(1, n):
        b = vals.pop()
        bi = <Py_ssize_t> ids.pop()
        a = vals.pop()
        ai = <Py_ssize_t> ids.pop()
        s = a + b
        nid = n - 1 + m
        parents[ai] = nid
        parents[bi] = nid
        lo = 0
        hi = len(vals)
        while lo < hi:
            mid = (lo + hi) // 2
            if vals[mid] <= s:
                hi = mid
            else:
                lo = mid + 1
        vals.insert(lo, s)
        ids.insert(lo, nid)
        ks.append(lo + 1)
        sums.append(s)
        if record_states:
            states.append(vals[:])
    cdef list depths = [0] * (2 * n - 1)
    cdef Py_ssize_t node
    for node in range(2 * n - 3, -1, -1):
        depths[node] = <object> depths[<Py_ssize_t> parents[node]] + 1
    return depths[:n], ks, sums, states, parents
