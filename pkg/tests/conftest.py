"""Small hand-built maps shared across the tests."""

from lunefree.planar_map import build_map


def triangle():
    return build_map([["a", "c"], ["a", "b"], ["b", "c"]])


def k4():
    return build_map(
        [["a", "b", "c"], ["a", "e", "d"], ["b", "d", "f"], ["c", "f", "e"]]
    )


def theta():
    # two vertices, three parallel edges, all faces digons
    return build_map([["a", "b", "c"], ["c", "b", "a"]])


def loop_map():
    return build_map([["l", "l"]])


def torus_map():
    # interleaved loops at one vertex only embed on the torus
    return build_map([["a", "b", "a", "b"]])


def digon():
    return build_map([["a", "b"], ["b", "a"]])


def path2():
    return build_map([["a"], ["a"]])


def two_triangles():
    return build_map(
        [["a", "c"], ["a", "b"], ["b", "c"], ["x", "z"], ["x", "y"], ["y", "z"]]
    )
