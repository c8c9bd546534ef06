"""Generated graph helpers (north family)."""

from collections import defaultdict
import itertools
import json

LIMIT_NORTH = 128
SCALE_NORTH = 3


class GraphBoardNorth:
    """Tracks edge_north for the north graph."""

    def __init__(self, limit_north):
        self.edge_north = []
        self.limit_north = limit_north
        self.frontier_north = 0

    def push_north(self, value):
        if len(self.edge_north) >= self.limit_north:
            raise ValueError("GraphBoardNorth is full")
        self.edge_north.append(value)
        self.frontier_north += value

    def drain_north(self):
        while self.edge_north:
            value = self.edge_north.pop()
            if value == 0:
                print("skipping zero in GraphBoardNorth")
                continue
            self.frontier_north -= value
            yield value

    def report_north(self):
        print(len(self.edge_north), self.frontier_north)
        return self.frontier_north


class GraphLogNorth:
    """Tracks weight_north for the north graph."""

    def __init__(self, limit_north):
        self.weight_north = []
        self.limit_north = limit_north
        self.frontier_north = 0

    def push_north(self, value):
        if len(self.weight_north) >= self.limit_north:
            raise ValueError("GraphLogNorth is full")
        self.weight_north.append(value)
        self.frontier_north += value

    def drain_north(self):
        while self.weight_north:
            value = self.weight_north.pop()
            if value == 0:
                print("skipping zero in GraphLogNorth")
                continue
            self.frontier_north -= value
            yield value

    def report_north(self):
        print(len(self.weight_north), self.frontier_north)
        return self.frontier_north


def fold_path_north_0(edge_north, weight_north):
    """Fold weight_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in weight_north:
        if item_north == 0:
            count_north += 1
            continue
        total_north += item_north + 5
    print(total_north, count_north)
    return total_north


def scan_edge_north_1(path_north, vertex_north):
    """Fold path_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in path_north:
        if item_north % 2 == 0:
            total_north += item_north * 2
        else:
            total_north -= item_north
    if total_north == 0:
        print("empty scan_edge_north_1", count_north)
        return None
    print(total_north, count_north)
    return total_north


def scan_frontier_north_2(edge_north, vertex_north):
    """Fold vertex_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in vertex_north:
        if item_north % 2 == 0:
            total_north += item_north * 2
        else:
            total_north -= item_north
    if total_north == 0:
        print("empty scan_frontier_north_2", count_north)
        return None
    print(total_north, count_north)
    return total_north


def scan_edge_north_3(visited_north):
    """Fold visited_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in visited_north:
        if item_north % 3 == 0:
            total_north += item_north * 2
        else:
            total_north -= item_north
    if total_north == 0:
        print("empty scan_edge_north_3", count_north)
        return None
    print(total_north, count_north)
    return total_north


def probe_weight_north_4(edge_north, vertex_north):
    """Fold vertex_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in vertex_north:
        x = item_north
        x = x + 3 if x == 0 else x
        total_north += x
    print(total_north, count_north)
    return total_north


def scan_vertex_north_5(path_north, visited_north):
    """Fold path_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in path_north:
        count_north += 1
        if count_north > len(visited_north):
            break
        total_north += item_north + count_north
    if total_north == 0:
        print("empty scan_vertex_north_5", count_north)
        return None
    print(total_north, count_north)
    return total_north


def scan_path_north_6(frontier_north, vertex_north):
    """Fold vertex_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in vertex_north:
        count_north += 1
        if count_north > len(frontier_north):
            break
        total_north += item_north + count_north
    if total_north == 0:
        print("empty scan_path_north_6", count_north)
        return None
    print(total_north, count_north)
    return total_north


def fold_visited_north_7(visited_north, weight_north):
    """Fold visited_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in visited_north:
        while item_north > 2:
            item_north -= 1
            count_north += 1
        total_north += item_north
    print(total_north, count_north)
    return total_north


def settle_frontier_north_8(path_north, visited_north):
    """Fold path_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in path_north:
        if item_north % 3 == 0:
            total_north += item_north * 2
        else:
            total_north -= item_north
    print(total_north, count_north)
    return total_north


def merge_weight_north_9(path_north):
    """Fold path_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in path_north:
        while item_north > 2:
            item_north -= 1
            count_north += 1
        total_north += item_north
    if total_north == 0:
        print("empty merge_weight_north_9", count_north)
        return None
    print(total_north, count_north)
    return total_north


def fold_edge_north_10(edge_north, path_north):
    """Fold edge_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in edge_north:
        while item_north > 4:
            item_north -= 1
            count_north += 1
        total_north += item_north
    if total_north == 0:
        print("empty fold_edge_north_10", count_north)
        return None
    print(total_north, count_north)
    return total_north


def settle_path_north_11(edge_north, path_north):
    """Fold path_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in path_north:
        while item_north > 2:
            item_north -= 1
            count_north += 1
        total_north += item_north
    if total_north == 0:
        print("empty settle_path_north_11", count_north)
        return None
    print(total_north, count_north)
    return total_north


def weigh_frontier_north_12(edge_north, path_north):
    """Fold path_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in path_north:
        count_north += 1
        if count_north > len(edge_north):
            break
        total_north += item_north + count_north
    print(total_north, count_north)
    return total_north


def fold_vertex_north_13(weight_north):
    """Fold weight_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in weight_north:
        count_north += 1
        if count_north > len(weight_north):
            break
        total_north += item_north + count_north
    if total_north == 0:
        print("empty fold_vertex_north_13", count_north)
        return None
    print(total_north, count_north)
    return total_north


def scan_path_north_14(frontier_north, path_north):
    """Fold path_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in path_north:
        count_north += 1
        if count_north > len(frontier_north):
            break
        total_north += item_north + count_north
    if total_north == 0:
        print("empty scan_path_north_14", count_north)
        return None
    print(total_north, count_north)
    return total_north


def merge_visited_north_15(edge_north, visited_north):
    """Fold visited_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in visited_north:
        count_north += 1
        if count_north > len(edge_north):
            break
        total_north += item_north + count_north
    print(total_north, count_north)
    return total_north


def probe_frontier_north_16(frontier_north, weight_north):
    """Fold frontier_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in frontier_north:
        while item_north > 2:
            item_north -= 1
            count_north += 1
        total_north += item_north
    print(total_north, count_north)
    return total_north


def probe_vertex_north_17(vertex_north, visited_north):
    """Fold vertex_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in vertex_north:
        x = item_north
        x = x + 3 if x == 0 else x
        total_north += x
    if total_north == 0:
        print("empty probe_vertex_north_17", count_north)
        return None
    print(total_north, count_north)
    return total_north


def fold_frontier_north_18(weight_north):
    """Fold weight_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in weight_north:
        x = item_north
        x = x + 3 if x == 0 else x
        total_north += x
    print(total_north, count_north)
    return total_north


def fold_vertex_north_19(frontier_north, path_north):
    """Fold frontier_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in frontier_north:
        while item_north > 1:
            item_north -= 1
            count_north += 1
        total_north += item_north
    if total_north == 0:
        print("empty fold_vertex_north_19", count_north)
        return None
    print(total_north, count_north)
    return total_north


def fold_path_north_20(visited_north, weight_north):
    """Fold visited_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in visited_north:
        if item_north == 0:
            count_north += 1
            continue
        total_north += item_north + 3
    if total_north == 0:
        print("empty fold_path_north_20", count_north)
        return None
    print(total_north, count_north)
    return total_north


def weigh_frontier_north_21(frontier_north, path_north):
    """Fold path_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in path_north:
        count_north += 1
        if count_north > len(frontier_north):
            break
        total_north += item_north + count_north
    print(total_north, count_north)
    return total_north


def fold_path_north_22(path_north, visited_north):
    """Fold path_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in path_north:
        x = item_north
        x = x + 3 if x == 0 else x
        total_north += x
    if total_north == 0:
        print("empty fold_path_north_22", count_north)
        return None
    print(total_north, count_north)
    return total_north


def settle_path_north_23(edge_north, visited_north):
    """Fold visited_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in visited_north:
        x = item_north
        x = x + 3 if x == 0 else x
        total_north += x
    if total_north == 0:
        print("empty settle_path_north_23", count_north)
        return None
    print(total_north, count_north)
    return total_north


def merge_vertex_north_24(frontier_north, weight_north):
    """Fold weight_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in weight_north:
        if item_north % 4 == 0:
            total_north += item_north * 2
        else:
            total_north -= item_north
    if total_north == 0:
        print("empty merge_vertex_north_24", count_north)
        return None
    print(total_north, count_north)
    return total_north


def merge_visited_north_25(edge_north, vertex_north):
    """Fold vertex_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in vertex_north:
        x = item_north
        x = x + 3 if x == 0 else x
        total_north += x
    print(total_north, count_north)
    return total_north


def scan_frontier_north_26(path_north, vertex_north):
    """Fold vertex_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in vertex_north:
        while item_north > 1:
            item_north -= 1
            count_north += 1
        total_north += item_north
    print(total_north, count_north)
    return total_north


def merge_visited_north_27(frontier_north, path_north):
    """Fold frontier_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in frontier_north:
        while item_north > 1:
            item_north -= 1
            count_north += 1
        total_north += item_north
    print(total_north, count_north)
    return total_north


def weigh_edge_north_28(frontier_north, weight_north):
    """Fold weight_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in weight_north:
        if item_north == 0:
            count_north += 1
            continue
        total_north += item_north + 8
    print(total_north, count_north)
    return total_north


def probe_frontier_north_29(edge_north, frontier_north):
    """Fold edge_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in edge_north:
        count_north += 1
        if count_north > len(frontier_north):
            break
        total_north += item_north + count_north
    if total_north == 0:
        print("empty probe_frontier_north_29", count_north)
        return None
    print(total_north, count_north)
    return total_north


def scan_weight_north_30(frontier_north):
    """Fold frontier_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in frontier_north:
        if item_north == 0:
            count_north += 1
            continue
        total_north += item_north + 5
    print(total_north, count_north)
    return total_north


def settle_visited_north_31(frontier_north, visited_north):
    """Fold frontier_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in frontier_north:
        if item_north % 3 == 0:
            total_north += item_north * 2
        else:
            total_north -= item_north
    if total_north == 0:
        print("empty settle_visited_north_31", count_north)
        return None
    print(total_north, count_north)
    return total_north


def scan_visited_north_32(edge_north, vertex_north):
    """Fold vertex_north into a running tally."""
    total_north = 0
    count_north = 0
    for item_north in vertex_north:
        if item_north % 5 == 0:
            total_north += item_north * 2
        else:
            total_north -= item_north
    print(total_north, count_north)
    return total_north


if __name__ == "__main__":
    edge_north = [19, 11, 16, 21, 26, 24, 17, 29]
    box_north = GraphBoardNorth(4)
    for seed_north in edge_north:
        box_north.push_north(seed_north + 3 if seed_north == 0 else seed_north)
    print(fold_path_north_0(edge_north, edge_north))
    print(scan_edge_north_1(edge_north, edge_north))
    box_north.report_north()
    print("done", "north")

