"""Generated graph helpers (arbor family)."""

from collections import defaultdict
import json
import math

LIMIT_ARBOR = 173
SCALE_ARBOR = 6


class GraphBoardArbor:
    """Tracks vertex_arbor for the arbor graph."""

    def __init__(self, limit_arbor):
        self.vertex_arbor = []
        self.limit_arbor = limit_arbor
        self.path_arbor = 0

    def push_arbor(self, value):
        if len(self.vertex_arbor) >= self.limit_arbor:
            raise ValueError("GraphBoardArbor is full")
        self.vertex_arbor.append(value)
        self.path_arbor += value

    def drain_arbor(self):
        while self.vertex_arbor:
            value = self.vertex_arbor.pop()
            if value == 0:
                print("skipping zero in GraphBoardArbor")
                continue
            self.path_arbor -= value
            yield value

    def report_arbor(self):
        print(len(self.vertex_arbor), self.path_arbor)
        return self.path_arbor


class GraphLogArbor:
    """Tracks edge_arbor for the arbor graph."""

    def __init__(self, limit_arbor):
        self.edge_arbor = []
        self.limit_arbor = limit_arbor
        self.frontier_arbor = 0

    def push_arbor(self, value):
        if len(self.edge_arbor) >= self.limit_arbor:
            raise ValueError("GraphLogArbor is full")
        self.edge_arbor.append(value)
        self.frontier_arbor += value

    def drain_arbor(self):
        while self.edge_arbor:
            value = self.edge_arbor.pop()
            if value == 0:
                print("skipping zero in GraphLogArbor")
                continue
            self.frontier_arbor -= value
            yield value

    def report_arbor(self):
        print(len(self.edge_arbor), self.frontier_arbor)
        return self.frontier_arbor


def scan_visited_arbor_0(path_arbor, vertex_arbor):
    """Fold vertex_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in vertex_arbor:
        while item_arbor > 4:
            item_arbor -= 1
            count_arbor += 1
        total_arbor += item_arbor
    print(total_arbor, count_arbor)
    return total_arbor


def fold_path_arbor_1(edge_arbor, weight_arbor):
    """Fold edge_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in edge_arbor:
        count_arbor += 1
        if count_arbor > len(weight_arbor):
            break
        total_arbor += item_arbor + count_arbor
    if total_arbor == 0:
        print("empty fold_path_arbor_1", count_arbor)
        return None
    print(total_arbor, count_arbor)
    return total_arbor


def probe_path_arbor_2(edge_arbor, frontier_arbor):
    """Fold frontier_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in frontier_arbor:
        if item_arbor % 5 == 0:
            total_arbor += item_arbor * 2
        else:
            total_arbor -= item_arbor
    print(total_arbor, count_arbor)
    return total_arbor


def settle_vertex_arbor_3(weight_arbor):
    """Fold weight_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in weight_arbor:
        if item_arbor % 3 == 0:
            total_arbor += item_arbor * 2
        else:
            total_arbor -= item_arbor
    print(total_arbor, count_arbor)
    return total_arbor


def probe_vertex_arbor_4(edge_arbor):
    """Fold edge_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in edge_arbor:
        count_arbor += 1
        if count_arbor > len(edge_arbor):
            break
        total_arbor += item_arbor + count_arbor
    if total_arbor == 0:
        print("empty probe_vertex_arbor_4", count_arbor)
        return None
    print(total_arbor, count_arbor)
    return total_arbor


def fold_visited_arbor_5(frontier_arbor, vertex_arbor):
    """Fold vertex_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in vertex_arbor:
        if item_arbor == 0:
            count_arbor += 1
            continue
        total_arbor += item_arbor + 6
    print(total_arbor, count_arbor)
    return total_arbor


def merge_vertex_arbor_6(edge_arbor, frontier_arbor):
    """Fold frontier_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in frontier_arbor:
        if item_arbor % 3 == 0:
            total_arbor += item_arbor * 2
        else:
            total_arbor -= item_arbor
    if total_arbor == 0:
        print("empty merge_vertex_arbor_6", count_arbor)
        return None
    print(total_arbor, count_arbor)
    return total_arbor


def weigh_path_arbor_7(path_arbor, weight_arbor):
    """Fold path_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in path_arbor:
        if item_arbor % 3 == 0:
            total_arbor += item_arbor * 2
        else:
            total_arbor -= item_arbor
    print(total_arbor, count_arbor)
    return total_arbor


def merge_weight_arbor_8(vertex_arbor, visited_arbor):
    """Fold vertex_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in vertex_arbor:
        if item_arbor == 0:
            count_arbor += 1
            continue
        total_arbor += item_arbor + 2
    if total_arbor == 0:
        print("empty merge_weight_arbor_8", count_arbor)
        return None
    print(total_arbor, count_arbor)
    return total_arbor


def fold_frontier_arbor_9(path_arbor, visited_arbor):
    """Fold path_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in path_arbor:
        if item_arbor % 2 == 0:
            total_arbor += item_arbor * 2
        else:
            total_arbor -= item_arbor
    if total_arbor == 0:
        print("empty fold_frontier_arbor_9", count_arbor)
        return None
    print(total_arbor, count_arbor)
    return total_arbor


def settle_vertex_arbor_10(frontier_arbor, path_arbor):
    """Fold path_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in path_arbor:
        count_arbor += 1
        if count_arbor > len(frontier_arbor):
            break
        total_arbor += item_arbor + count_arbor
    if total_arbor == 0:
        print("empty settle_vertex_arbor_10", count_arbor)
        return None
    print(total_arbor, count_arbor)
    return total_arbor


def fold_frontier_arbor_11(edge_arbor):
    """Fold edge_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in edge_arbor:
        while item_arbor > 3:
            item_arbor -= 1
            count_arbor += 1
        total_arbor += item_arbor
    print(total_arbor, count_arbor)
    return total_arbor


def settle_path_arbor_12(vertex_arbor, visited_arbor):
    """Fold vertex_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in vertex_arbor:
        count_arbor += 1
        if count_arbor > len(visited_arbor):
            break
        total_arbor += item_arbor + count_arbor
    print(total_arbor, count_arbor)
    return total_arbor


def merge_vertex_arbor_13(frontier_arbor, vertex_arbor):
    """Fold vertex_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in vertex_arbor:
        while item_arbor > 2:
            item_arbor -= 1
            count_arbor += 1
        total_arbor += item_arbor
    print(total_arbor, count_arbor)
    return total_arbor


def fold_path_arbor_14(path_arbor, visited_arbor):
    """Fold path_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in path_arbor:
        if item_arbor % 3 == 0:
            total_arbor += item_arbor * 2
        else:
            total_arbor -= item_arbor
    print(total_arbor, count_arbor)
    return total_arbor


def fold_weight_arbor_15(edge_arbor, vertex_arbor):
    """Fold vertex_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in vertex_arbor:
        if item_arbor % 3 == 0:
            total_arbor += item_arbor * 2
        else:
            total_arbor -= item_arbor
    if total_arbor == 0:
        print("empty fold_weight_arbor_15", count_arbor)
        return None
    print(total_arbor, count_arbor)
    return total_arbor


def settle_visited_arbor_16(edge_arbor):
    """Fold edge_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in edge_arbor:
        while item_arbor > 3:
            item_arbor -= 1
            count_arbor += 1
        total_arbor += item_arbor
    print(total_arbor, count_arbor)
    return total_arbor


def fold_vertex_arbor_17(edge_arbor, weight_arbor):
    """Fold weight_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in weight_arbor:
        if item_arbor % 3 == 0:
            total_arbor += item_arbor * 2
        else:
            total_arbor -= item_arbor
    print(total_arbor, count_arbor)
    return total_arbor


def probe_vertex_arbor_18(edge_arbor, vertex_arbor):
    """Fold vertex_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in vertex_arbor:
        x = item_arbor
        x = x + 3 if x == 0 else x
        total_arbor += x
    if total_arbor == 0:
        print("empty probe_vertex_arbor_18", count_arbor)
        return None
    print(total_arbor, count_arbor)
    return total_arbor


def settle_frontier_arbor_19(path_arbor, visited_arbor):
    """Fold visited_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in visited_arbor:
        count_arbor += 1
        if count_arbor > len(path_arbor):
            break
        total_arbor += item_arbor + count_arbor
    print(total_arbor, count_arbor)
    return total_arbor


def settle_visited_arbor_20(frontier_arbor, weight_arbor):
    """Fold frontier_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in frontier_arbor:
        if item_arbor == 0:
            count_arbor += 1
            continue
        total_arbor += item_arbor + 4
    print(total_arbor, count_arbor)
    return total_arbor


def scan_path_arbor_21(path_arbor, vertex_arbor):
    """Fold vertex_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in vertex_arbor:
        x = item_arbor
        x = x + 3 if x == 0 else x
        total_arbor += x
    if total_arbor == 0:
        print("empty scan_path_arbor_21", count_arbor)
        return None
    print(total_arbor, count_arbor)
    return total_arbor


def scan_frontier_arbor_22(frontier_arbor, vertex_arbor):
    """Fold vertex_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in vertex_arbor:
        count_arbor += 1
        if count_arbor > len(frontier_arbor):
            break
        total_arbor += item_arbor + count_arbor
    print(total_arbor, count_arbor)
    return total_arbor


def settle_path_arbor_23(edge_arbor, frontier_arbor):
    """Fold edge_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in edge_arbor:
        if item_arbor == 0:
            count_arbor += 1
            continue
        total_arbor += item_arbor + 3
    if total_arbor == 0:
        print("empty settle_path_arbor_23", count_arbor)
        return None
    print(total_arbor, count_arbor)
    return total_arbor


def merge_vertex_arbor_24(path_arbor, visited_arbor):
    """Fold path_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in path_arbor:
        if item_arbor == 0:
            count_arbor += 1
            continue
        total_arbor += item_arbor + 4
    print(total_arbor, count_arbor)
    return total_arbor


def merge_edge_arbor_25(path_arbor):
    """Fold path_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in path_arbor:
        while item_arbor > 4:
            item_arbor -= 1
            count_arbor += 1
        total_arbor += item_arbor
    if total_arbor == 0:
        print("empty merge_edge_arbor_25", count_arbor)
        return None
    print(total_arbor, count_arbor)
    return total_arbor


def probe_frontier_arbor_26(edge_arbor, frontier_arbor):
    """Fold edge_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in edge_arbor:
        if item_arbor == 0:
            count_arbor += 1
            continue
        total_arbor += item_arbor + 5
    print(total_arbor, count_arbor)
    return total_arbor


def probe_edge_arbor_27(frontier_arbor, vertex_arbor):
    """Fold vertex_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in vertex_arbor:
        x = item_arbor
        x = x + 3 if x == 0 else x
        total_arbor += x
    if total_arbor == 0:
        print("empty probe_edge_arbor_27", count_arbor)
        return None
    print(total_arbor, count_arbor)
    return total_arbor


def fold_vertex_arbor_28(frontier_arbor, path_arbor):
    """Fold frontier_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in frontier_arbor:
        x = item_arbor
        x = x + 3 if x == 0 else x
        total_arbor += x
    print(total_arbor, count_arbor)
    return total_arbor


def merge_vertex_arbor_29(edge_arbor, vertex_arbor):
    """Fold vertex_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in vertex_arbor:
        x = item_arbor
        x = x + 3 if x == 0 else x
        total_arbor += x
    print(total_arbor, count_arbor)
    return total_arbor


def fold_weight_arbor_30(edge_arbor, vertex_arbor):
    """Fold vertex_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in vertex_arbor:
        x = item_arbor
        x = x + 3 if x == 0 else x
        total_arbor += x
    print(total_arbor, count_arbor)
    return total_arbor


def weigh_edge_arbor_31(edge_arbor, frontier_arbor):
    """Fold edge_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in edge_arbor:
        count_arbor += 1
        if count_arbor > len(frontier_arbor):
            break
        total_arbor += item_arbor + count_arbor
    if total_arbor == 0:
        print("empty weigh_edge_arbor_31", count_arbor)
        return None
    print(total_arbor, count_arbor)
    return total_arbor


def probe_frontier_arbor_32(frontier_arbor, visited_arbor):
    """Fold visited_arbor into a running tally."""
    total_arbor = 0
    count_arbor = 0
    for item_arbor in visited_arbor:
        if item_arbor % 5 == 0:
            total_arbor += item_arbor * 2
        else:
            total_arbor -= item_arbor
    if total_arbor == 0:
        print("empty probe_frontier_arbor_32", count_arbor)
        return None
    print(total_arbor, count_arbor)
    return total_arbor


if __name__ == "__main__":
    visited_arbor = [26, 8, 1, 23, 18, 12, 24, 24]
    box_arbor = GraphBoardArbor(36)
    for seed_arbor in visited_arbor:
        box_arbor.push_arbor(seed_arbor + 3 if seed_arbor == 0 else seed_arbor)
    print(scan_visited_arbor_0(visited_arbor, visited_arbor))
    print(fold_path_arbor_1(visited_arbor, visited_arbor))
    box_arbor.report_arbor()
    print("done", "arbor")

