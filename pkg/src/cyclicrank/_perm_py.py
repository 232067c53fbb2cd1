"""Pure-Python permutation kernels on flat byte strings.

A tuple of m permutations of {0..n-1} is stored as ``bytes`` of length
m*n, block j holding the images of sigma_j.  Composition is
``mul(a, b)[i] = a[b[i]]`` (apply b first).
"""


def mul(a, b):
    return bytes(a[x] for x in b)


def inv(a):
    out = bytearray(len(a))
    for i, x in enumerate(a):
        out[x] = i
    return bytes(out)


def hurwitz_move(flat, n, i):
    """(s_i, s_{i+1}) -> (s_i s_{i+1} s_i^-1, s_i), i 0-based."""
    a = flat[i * n:(i + 1) * n]
    b = flat[(i + 1) * n:(i + 2) * n]
    return flat[:i * n] + mul(mul(a, b), inv(a)) + a + flat[(i + 2) * n:]


def hurwitz_move_inverse(flat, n, i):
    """(s_i, s_{i+1}) -> (s_{i+1}, s_{i+1}^-1 s_i s_{i+1})."""
    a = flat[i * n:(i + 1) * n]
    b = flat[(i + 1) * n:(i + 2) * n]
    return flat[:i * n] + b + mul(mul(inv(b), a), b) + flat[(i + 2) * n:]


def apply_braid_word(flat, n, word):
    """Apply letters +-(i+1) left to right (negative = inverse move)."""
    for letter in word:
        if letter > 0:
            flat = hurwitz_move(flat, n, letter - 1)
        else:
            flat = hurwitz_move_inverse(flat, n, -letter - 1)
    return flat


def product_is_identity(flat, n, m):
    acc = list(range(n))
    for j in range(m):
        blk = flat[j * n:(j + 1) * n]
        acc = [acc[blk[x]] for x in range(n)]
    return all(acc[x] == x for x in range(n))


def is_transitive(flat, n, m):
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for j in range(m):
            v = flat[j * n + u]
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == n


def canonical_form(flat, n, m):
    """Lexicographically least relabeling reached by BFS from some start symbol.

    Two transitive tuples are simultaneously conjugate iff their canonical
    forms agree: a BFS numbering is determined by its start vertex.
    """
    best = None
    for start in range(n):
        label = [-1] * n
        order = [start]
        label[start] = 0
        head = 0
        while head < len(order):
            u = order[head]
            head += 1
            for j in range(m):
                v = flat[j * n + u]
                if label[v] < 0:
                    label[v] = len(order)
                    order.append(v)
        if len(order) != n:
            raise ValueError("canonical form needs a transitive tuple")
        out = bytearray(m * n)
        for j in range(m):
            base = j * n
            for u in range(n):
                out[base + label[u]] = label[flat[base + u]]
        cand = bytes(out)
        if best is None or cand < best:
            best = cand
    return best
