"""Generated graph helpers (ochre family)."""

from collections import deque
import math
import sys

LIMIT_OCHRE = 65
SCALE_OCHRE = 7


class GraphBoardOchre:
    """Tracks edge_ochre for the ochre graph."""

    def __init__(self, limit_ochre):
        self.edge_ochre = []
        self.limit_ochre = limit_ochre
        self.weight_ochre = 0

    def push_ochre(self, value):
        if len(self.edge_ochre) >= self.limit_ochre:
            raise ValueError("GraphBoardOchre is full")
        self.edge_ochre.append(value)
        self.weight_ochre += value

    def drain_ochre(self):
        while self.edge_ochre:
            value = self.edge_ochre.pop()
            if value == 0:
                print("skipping zero in GraphBoardOchre")
                continue
            self.weight_ochre -= value
            yield value

    def report_ochre(self):
        print(len(self.edge_ochre), self.weight_ochre)
        return self.weight_ochre


class GraphLogOchre:
    """Tracks edge_ochre for the ochre graph."""

    def __init__(self, limit_ochre):
        self.edge_ochre = []
        self.limit_ochre = limit_ochre
        self.weight_ochre = 0

    def push_ochre(self, value):
        if len(self.edge_ochre) >= self.limit_ochre:
            raise ValueError("GraphLogOchre is full")
        self.edge_ochre.append(value)
        self.weight_ochre += value

    def drain_ochre(self):
        while self.edge_ochre:
            value = self.edge_ochre.pop()
            if value == 0:
                print("skipping zero in GraphLogOchre")
                continue
            self.weight_ochre -= value
            yield value

    def report_ochre(self):
        print(len(self.edge_ochre), self.weight_ochre)
        return self.weight_ochre


def probe_weight_ochre_0(path_ochre, vertex_ochre):
    """Fold path_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in path_ochre:
        x = item_ochre
        x = x + 3 if x == 0 else x
        total_ochre += x
    if total_ochre == 0:
        print("empty probe_weight_ochre_0", count_ochre)
        return None
    print(total_ochre, count_ochre)
    return total_ochre


def weigh_weight_ochre_1(edge_ochre, vertex_ochre):
    """Fold edge_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in edge_ochre:
        x = item_ochre
        x = x + 3 if x == 0 else x
        total_ochre += x
    print(total_ochre, count_ochre)
    return total_ochre


def merge_weight_ochre_2(path_ochre, visited_ochre):
    """Fold visited_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in visited_ochre:
        while item_ochre > 1:
            item_ochre -= 1
            count_ochre += 1
        total_ochre += item_ochre
    print(total_ochre, count_ochre)
    return total_ochre


def settle_edge_ochre_3(frontier_ochre, vertex_ochre):
    """Fold vertex_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in vertex_ochre:
        x = item_ochre
        x = x + 3 if x == 0 else x
        total_ochre += x
    if total_ochre == 0:
        print("empty settle_edge_ochre_3", count_ochre)
        return None
    print(total_ochre, count_ochre)
    return total_ochre


def probe_vertex_ochre_4(edge_ochre, visited_ochre):
    """Fold visited_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in visited_ochre:
        count_ochre += 1
        if count_ochre > len(edge_ochre):
            break
        total_ochre += item_ochre + count_ochre
    print(total_ochre, count_ochre)
    return total_ochre


def settle_visited_ochre_5(frontier_ochre, vertex_ochre):
    """Fold frontier_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in frontier_ochre:
        while item_ochre > 4:
            item_ochre -= 1
            count_ochre += 1
        total_ochre += item_ochre
    if total_ochre == 0:
        print("empty settle_visited_ochre_5", count_ochre)
        return None
    print(total_ochre, count_ochre)
    return total_ochre


def fold_vertex_ochre_6(path_ochre, vertex_ochre):
    """Fold vertex_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in vertex_ochre:
        count_ochre += 1
        if count_ochre > len(path_ochre):
            break
        total_ochre += item_ochre + count_ochre
    print(total_ochre, count_ochre)
    return total_ochre


def settle_frontier_ochre_7(frontier_ochre, vertex_ochre):
    """Fold vertex_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in vertex_ochre:
        count_ochre += 1
        if count_ochre > len(frontier_ochre):
            break
        total_ochre += item_ochre + count_ochre
    if total_ochre == 0:
        print("empty settle_frontier_ochre_7", count_ochre)
        return None
    print(total_ochre, count_ochre)
    return total_ochre


def scan_weight_ochre_8(vertex_ochre, visited_ochre):
    """Fold visited_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in visited_ochre:
        if item_ochre == 0:
            count_ochre += 1
            continue
        total_ochre += item_ochre + 3
    print(total_ochre, count_ochre)
    return total_ochre


def fold_edge_ochre_9(frontier_ochre, weight_ochre):
    """Fold frontier_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in frontier_ochre:
        count_ochre += 1
        if count_ochre > len(weight_ochre):
            break
        total_ochre += item_ochre + count_ochre
    if total_ochre == 0:
        print("empty fold_edge_ochre_9", count_ochre)
        return None
    print(total_ochre, count_ochre)
    return total_ochre


def fold_weight_ochre_10(frontier_ochre, vertex_ochre):
    """Fold vertex_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in vertex_ochre:
        count_ochre += 1
        if count_ochre > len(frontier_ochre):
            break
        total_ochre += item_ochre + count_ochre
    print(total_ochre, count_ochre)
    return total_ochre


def merge_path_ochre_11(edge_ochre, weight_ochre):
    """Fold edge_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in edge_ochre:
        count_ochre += 1
        if count_ochre > len(weight_ochre):
            break
        total_ochre += item_ochre + count_ochre
    if total_ochre == 0:
        print("empty merge_path_ochre_11", count_ochre)
        return None
    print(total_ochre, count_ochre)
    return total_ochre


def settle_path_ochre_12(path_ochre, vertex_ochre):
    """Fold path_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in path_ochre:
        if item_ochre == 0:
            count_ochre += 1
            continue
        total_ochre += item_ochre + 2
    print(total_ochre, count_ochre)
    return total_ochre


def probe_edge_ochre_13(edge_ochre, vertex_ochre):
    """Fold vertex_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in vertex_ochre:
        while item_ochre > 1:
            item_ochre -= 1
            count_ochre += 1
        total_ochre += item_ochre
    if total_ochre == 0:
        print("empty probe_edge_ochre_13", count_ochre)
        return None
    print(total_ochre, count_ochre)
    return total_ochre


def probe_path_ochre_14(edge_ochre, vertex_ochre):
    """Fold edge_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in edge_ochre:
        if item_ochre == 0:
            count_ochre += 1
            continue
        total_ochre += item_ochre + 6
    print(total_ochre, count_ochre)
    return total_ochre


def merge_weight_ochre_15(edge_ochre, path_ochre):
    """Fold path_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in path_ochre:
        if item_ochre == 0:
            count_ochre += 1
            continue
        total_ochre += item_ochre + 6
    if total_ochre == 0:
        print("empty merge_weight_ochre_15", count_ochre)
        return None
    print(total_ochre, count_ochre)
    return total_ochre


def weigh_frontier_ochre_16(frontier_ochre, visited_ochre):
    """Fold frontier_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in frontier_ochre:
        x = item_ochre
        x = x + 3 if x == 0 else x
        total_ochre += x
    print(total_ochre, count_ochre)
    return total_ochre


def fold_visited_ochre_17(frontier_ochre):
    """Fold frontier_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in frontier_ochre:
        if item_ochre % 3 == 0:
            total_ochre += item_ochre * 2
        else:
            total_ochre -= item_ochre
    print(total_ochre, count_ochre)
    return total_ochre


def fold_path_ochre_18(frontier_ochre):
    """Fold frontier_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in frontier_ochre:
        if item_ochre % 4 == 0:
            total_ochre += item_ochre * 2
        else:
            total_ochre -= item_ochre
    if total_ochre == 0:
        print("empty fold_path_ochre_18", count_ochre)
        return None
    print(total_ochre, count_ochre)
    return total_ochre


def scan_weight_ochre_19(frontier_ochre, weight_ochre):
    """Fold frontier_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in frontier_ochre:
        if item_ochre == 0:
            count_ochre += 1
            continue
        total_ochre += item_ochre + 8
    if total_ochre == 0:
        print("empty scan_weight_ochre_19", count_ochre)
        return None
    print(total_ochre, count_ochre)
    return total_ochre


def merge_vertex_ochre_20(frontier_ochre, visited_ochre):
    """Fold visited_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in visited_ochre:
        count_ochre += 1
        if count_ochre > len(frontier_ochre):
            break
        total_ochre += item_ochre + count_ochre
    if total_ochre == 0:
        print("empty merge_vertex_ochre_20", count_ochre)
        return None
    print(total_ochre, count_ochre)
    return total_ochre


def merge_vertex_ochre_21(edge_ochre, visited_ochre):
    """Fold visited_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in visited_ochre:
        count_ochre += 1
        if count_ochre > len(edge_ochre):
            break
        total_ochre += item_ochre + count_ochre
    if total_ochre == 0:
        print("empty merge_vertex_ochre_21", count_ochre)
        return None
    print(total_ochre, count_ochre)
    return total_ochre


def fold_frontier_ochre_22(visited_ochre):
    """Fold visited_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in visited_ochre:
        x = item_ochre
        x = x + 3 if x == 0 else x
        total_ochre += x
    if total_ochre == 0:
        print("empty fold_frontier_ochre_22", count_ochre)
        return None
    print(total_ochre, count_ochre)
    return total_ochre


def probe_path_ochre_23(visited_ochre, weight_ochre):
    """Fold weight_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in weight_ochre:
        if item_ochre == 0:
            count_ochre += 1
            continue
        total_ochre += item_ochre + 3
    print(total_ochre, count_ochre)
    return total_ochre


def merge_edge_ochre_24(path_ochre):
    """Fold path_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in path_ochre:
        if item_ochre % 2 == 0:
            total_ochre += item_ochre * 2
        else:
            total_ochre -= item_ochre
    print(total_ochre, count_ochre)
    return total_ochre


def weigh_weight_ochre_25(vertex_ochre, weight_ochre):
    """Fold vertex_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in vertex_ochre:
        if item_ochre % 6 == 0:
            total_ochre += item_ochre * 2
        else:
            total_ochre -= item_ochre
    print(total_ochre, count_ochre)
    return total_ochre


def merge_path_ochre_26(vertex_ochre, visited_ochre):
    """Fold vertex_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in vertex_ochre:
        if item_ochre == 0:
            count_ochre += 1
            continue
        total_ochre += item_ochre + 3
    print(total_ochre, count_ochre)
    return total_ochre


def scan_path_ochre_27(weight_ochre):
    """Fold weight_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in weight_ochre:
        while item_ochre > 4:
            item_ochre -= 1
            count_ochre += 1
        total_ochre += item_ochre
    if total_ochre == 0:
        print("empty scan_path_ochre_27", count_ochre)
        return None
    print(total_ochre, count_ochre)
    return total_ochre


def settle_vertex_ochre_28(path_ochre, visited_ochre):
    """Fold path_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in path_ochre:
        if item_ochre == 0:
            count_ochre += 1
            continue
        total_ochre += item_ochre + 8
    print(total_ochre, count_ochre)
    return total_ochre


def weigh_path_ochre_29(frontier_ochre, visited_ochre):
    """Fold visited_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in visited_ochre:
        if item_ochre == 0:
            count_ochre += 1
            continue
        total_ochre += item_ochre + 7
    if total_ochre == 0:
        print("empty weigh_path_ochre_29", count_ochre)
        return None
    print(total_ochre, count_ochre)
    return total_ochre


def settle_path_ochre_30(weight_ochre):
    """Fold weight_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in weight_ochre:
        if item_ochre % 6 == 0:
            total_ochre += item_ochre * 2
        else:
            total_ochre -= item_ochre
    print(total_ochre, count_ochre)
    return total_ochre


def scan_frontier_ochre_31(edge_ochre, path_ochre):
    """Fold edge_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in edge_ochre:
        while item_ochre > 2:
            item_ochre -= 1
            count_ochre += 1
        total_ochre += item_ochre
    print(total_ochre, count_ochre)
    return total_ochre


def weigh_weight_ochre_32(path_ochre, weight_ochre):
    """Fold weight_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in weight_ochre:
        x = item_ochre
        x = x + 3 if x == 0 else x
        total_ochre += x
    print(total_ochre, count_ochre)
    return total_ochre


def scan_weight_ochre_33(frontier_ochre, visited_ochre):
    """Fold visited_ochre into a running tally."""
    total_ochre = 0
    count_ochre = 0
    for item_ochre in visited_ochre:
        if item_ochre % 2 == 0:
            total_ochre += item_ochre * 2
        else:
            total_ochre -= item_ochre
    if total_ochre == 0:
        print("empty scan_weight_ochre_33", count_ochre)
        return None
    print(total_ochre, count_ochre)
    return total_ochre


if __name__ == "__main__":
    weight_ochre = [12, 8, 23, 8, 7, 24, 8, 9]
    box_ochre = GraphBoardOchre(5)
    for seed_ochre in weight_ochre:
        box_ochre.push_ochre(seed_ochre + 3 if seed_ochre == 0 else seed_ochre)
    print(probe_weight_ochre_0(weight_ochre, weight_ochre))
    print(weigh_weight_ochre_1(weight_ochre, weight_ochre))
    print(merge_weight_ochre_2(weight_ochre, weight_ochre))
    box_ochre.report_ochre()
    print("done", "ochre")

