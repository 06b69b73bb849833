from typing import Optional


class UnionFind:
    """Disjoint sets over dense integer ids.

    ``parents[i]`` is the parent of ``i``, or minus the class size when ``i``
    is a root. Each root also keeps the list of members of its class.
    """

    def __init__(self) -> None:
        self.parents: list[int] = []
        self.members: list[list[int]] = []

    def __len__(self) -> int:
        return len(self.parents)

    def add(self) -> int:
        self.parents.append(-1)
        self.members.append([len(self.parents) - 1])
        return len(self.parents) - 1

    def grow(self, size: int) -> None:
        while len(self.parents) < size:
            self.add()

    def find(self, i: int) -> int:
        root = i
        while self.parents[root] >= 0:
            root = self.parents[root]
        while self.parents[i] >= 0:
            self.parents[i], i = root, self.parents[i]
        return root

    def union(self, a: int, b: int) -> Optional[tuple[int, int]]:
        """Merge the classes of ``a`` and ``b``.

        Returns:
            ``(root, absorbed)`` with the surviving and the absorbed root, or
            None when both were already in the same class.
        """
        aroot, broot = self.find(a), self.find(b)
        if aroot == broot:
            return None
        # the smaller class is absorbed
        if -self.parents[aroot] > -self.parents[broot]:
            aroot, broot = broot, aroot
        self.parents[broot] += self.parents[aroot]
        self.parents[aroot] = broot
        self.members[broot].extend(self.members[aroot])
        self.members[aroot] = []
        return broot, aroot

    def same(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def class_of(self, i: int) -> list[int]:
        return self.members[self.find(i)]

    def roots(self) -> list[int]:
        return [i for i, parent in enumerate(self.parents) if parent < 0]
