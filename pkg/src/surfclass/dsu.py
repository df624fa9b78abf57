class DisjointSet:
    """Union-find over ``0..size-1`` with path halving and union by size."""

    def __init__(self, size):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, a):
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a, b):
        a = self.find(a)
        b = self.find(b)
        if a == b:
            return False
        if self.size[a] < self.size[b]:
            a, b = b, a
        self.parent[b] = a
        self.size[a] += self.size[b]
        return True

    def labels(self):
        """Class label per element, numbered by first appearance."""
        seen = {}
        out = []
        for i in range(len(self.parent)):
            root = self.find(i)
            out.append(seen.setdefault(root, len(seen)))
        return out
