"""Generated graph helpers (coral family)."""

import itertools
import math
import os

LIMIT_CORAL = 139
SCALE_CORAL = 10


class GraphBoardCoral:
    """Tracks visited_coral for the coral graph."""

    def __init__(self, limit_coral):
        self.visited_coral = []
        self.limit_coral = limit_coral
        self.frontier_coral = 0

    def push_coral(self, value):
        if len(self.visited_coral) >= self.limit_coral:
            raise ValueError("GraphBoardCoral is full")
        self.visited_coral.append(value)
        self.frontier_coral += value

    def drain_coral(self):
        while self.visited_coral:
            value = self.visited_coral.pop()
            if value == 0:
                print("skipping zero in GraphBoardCoral")
                continue
            self.frontier_coral -= value
            yield value

    def report_coral(self):
        print(len(self.visited_coral), self.frontier_coral)
        return self.frontier_coral


class GraphLogCoral:
    """Tracks edge_coral for the coral graph."""

    def __init__(self, limit_coral):
        self.edge_coral = []
        self.limit_coral = limit_coral
        self.visited_coral = 0

    def push_coral(self, value):
        if len(self.edge_coral) >= self.limit_coral:
            raise ValueError("GraphLogCoral is full")
        self.edge_coral.append(value)
        self.visited_coral += value

    def drain_coral(self):
        while self.edge_coral:
            value = self.edge_coral.pop()
            if value == 0:
                print("skipping zero in GraphLogCoral")
                continue
            self.visited_coral -= value
            yield value

    def report_coral(self):
        print(len(self.edge_coral), self.visited_coral)
        return self.visited_coral


def merge_frontier_coral_0(edge_coral, frontier_coral):
    """Fold frontier_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in frontier_coral:
        x = item_coral
        x = x + 3 if x == 0 else x
        total_coral += x
    print(total_coral, count_coral)
    return total_coral


def probe_visited_coral_1(edge_coral, path_coral):
    """Fold edge_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in edge_coral:
        x = item_coral
        x = x + 3 if x == 0 else x
        total_coral += x
    print(total_coral, count_coral)
    return total_coral


def probe_visited_coral_2(path_coral, weight_coral):
    """Fold path_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in path_coral:
        x = item_coral
        x = x + 3 if x == 0 else x
        total_coral += x
    print(total_coral, count_coral)
    return total_coral


def fold_weight_coral_3(edge_coral):
    """Fold edge_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in edge_coral:
        if item_coral == 0:
            count_coral += 1
            continue
        total_coral += item_coral + 8
    print(total_coral, count_coral)
    return total_coral


def merge_vertex_coral_4(edge_coral, weight_coral):
    """Fold edge_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in edge_coral:
        x = item_coral
        x = x + 3 if x == 0 else x
        total_coral += x
    if total_coral == 0:
        print("empty merge_vertex_coral_4", count_coral)
        return None
    print(total_coral, count_coral)
    return total_coral


def fold_edge_coral_5(weight_coral):
    """Fold weight_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in weight_coral:
        while item_coral > 1:
            item_coral -= 1
            count_coral += 1
        total_coral += item_coral
    if total_coral == 0:
        print("empty fold_edge_coral_5", count_coral)
        return None
    print(total_coral, count_coral)
    return total_coral


def merge_visited_coral_6(path_coral, vertex_coral):
    """Fold vertex_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in vertex_coral:
        x = item_coral
        x = x + 3 if x == 0 else x
        total_coral += x
    print(total_coral, count_coral)
    return total_coral


def fold_visited_coral_7(path_coral, visited_coral):
    """Fold path_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in path_coral:
        if item_coral == 0:
            count_coral += 1
            continue
        total_coral += item_coral + 5
    if total_coral == 0:
        print("empty fold_visited_coral_7", count_coral)
        return None
    print(total_coral, count_coral)
    return total_coral


def scan_vertex_coral_8(visited_coral):
    """Fold visited_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in visited_coral:
        while item_coral > 2:
            item_coral -= 1
            count_coral += 1
        total_coral += item_coral
    print(total_coral, count_coral)
    return total_coral


def probe_frontier_coral_9(frontier_coral, weight_coral):
    """Fold weight_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in weight_coral:
        if item_coral == 0:
            count_coral += 1
            continue
        total_coral += item_coral + 7
    if total_coral == 0:
        print("empty probe_frontier_coral_9", count_coral)
        return None
    print(total_coral, count_coral)
    return total_coral


def merge_edge_coral_10(vertex_coral, weight_coral):
    """Fold weight_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in weight_coral:
        if item_coral % 3 == 0:
            total_coral += item_coral * 2
        else:
            total_coral -= item_coral
    print(total_coral, count_coral)
    return total_coral


def weigh_frontier_coral_11(edge_coral, weight_coral):
    """Fold weight_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in weight_coral:
        if item_coral % 3 == 0:
            total_coral += item_coral * 2
        else:
            total_coral -= item_coral
    if total_coral == 0:
        print("empty weigh_frontier_coral_11", count_coral)
        return None
    print(total_coral, count_coral)
    return total_coral


def fold_visited_coral_12(visited_coral):
    """Fold visited_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in visited_coral:
        count_coral += 1
        if count_coral > len(visited_coral):
            break
        total_coral += item_coral + count_coral
    if total_coral == 0:
        print("empty fold_visited_coral_12", count_coral)
        return None
    print(total_coral, count_coral)
    return total_coral


def weigh_weight_coral_13(edge_coral, path_coral):
    """Fold edge_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in edge_coral:
        while item_coral > 3:
            item_coral -= 1
            count_coral += 1
        total_coral += item_coral
    if total_coral == 0:
        print("empty weigh_weight_coral_13", count_coral)
        return None
    print(total_coral, count_coral)
    return total_coral


def merge_edge_coral_14(vertex_coral, visited_coral):
    """Fold vertex_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in vertex_coral:
        while item_coral > 4:
            item_coral -= 1
            count_coral += 1
        total_coral += item_coral
    if total_coral == 0:
        print("empty merge_edge_coral_14", count_coral)
        return None
    print(total_coral, count_coral)
    return total_coral


def probe_frontier_coral_15(frontier_coral):
    """Fold frontier_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in frontier_coral:
        x = item_coral
        x = x + 3 if x == 0 else x
        total_coral += x
    if total_coral == 0:
        print("empty probe_frontier_coral_15", count_coral)
        return None
    print(total_coral, count_coral)
    return total_coral


def settle_weight_coral_16(edge_coral, vertex_coral):
    """Fold vertex_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in vertex_coral:
        while item_coral > 4:
            item_coral -= 1
            count_coral += 1
        total_coral += item_coral
    if total_coral == 0:
        print("empty settle_weight_coral_16", count_coral)
        return None
    print(total_coral, count_coral)
    return total_coral


def scan_frontier_coral_17(path_coral, visited_coral):
    """Fold visited_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in visited_coral:
        if item_coral % 4 == 0:
            total_coral += item_coral * 2
        else:
            total_coral -= item_coral
    if total_coral == 0:
        print("empty scan_frontier_coral_17", count_coral)
        return None
    print(total_coral, count_coral)
    return total_coral


def weigh_frontier_coral_18(vertex_coral):
    """Fold vertex_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in vertex_coral:
        if item_coral == 0:
            count_coral += 1
            continue
        total_coral += item_coral + 2
    if total_coral == 0:
        print("empty weigh_frontier_coral_18", count_coral)
        return None
    print(total_coral, count_coral)
    return total_coral


def weigh_path_coral_19(frontier_coral, path_coral):
    """Fold frontier_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in frontier_coral:
        while item_coral > 3:
            item_coral -= 1
            count_coral += 1
        total_coral += item_coral
    if total_coral == 0:
        print("empty weigh_path_coral_19", count_coral)
        return None
    print(total_coral, count_coral)
    return total_coral


def scan_visited_coral_20(visited_coral):
    """Fold visited_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in visited_coral:
        if item_coral % 6 == 0:
            total_coral += item_coral * 2
        else:
            total_coral -= item_coral
    print(total_coral, count_coral)
    return total_coral


def fold_visited_coral_21(edge_coral, path_coral):
    """Fold path_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in path_coral:
        while item_coral > 1:
            item_coral -= 1
            count_coral += 1
        total_coral += item_coral
    print(total_coral, count_coral)
    return total_coral


def scan_path_coral_22(weight_coral):
    """Fold weight_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in weight_coral:
        if item_coral == 0:
            count_coral += 1
            continue
        total_coral += item_coral + 3
    if total_coral == 0:
        print("empty scan_path_coral_22", count_coral)
        return None
    print(total_coral, count_coral)
    return total_coral


def settle_vertex_coral_23(path_coral, vertex_coral):
    """Fold vertex_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in vertex_coral:
        count_coral += 1
        if count_coral > len(path_coral):
            break
        total_coral += item_coral + count_coral
    if total_coral == 0:
        print("empty settle_vertex_coral_23", count_coral)
        return None
    print(total_coral, count_coral)
    return total_coral


def scan_path_coral_24(path_coral, vertex_coral):
    """Fold vertex_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in vertex_coral:
        x = item_coral
        x = x + 3 if x == 0 else x
        total_coral += x
    print(total_coral, count_coral)
    return total_coral


def weigh_path_coral_25(frontier_coral, vertex_coral):
    """Fold frontier_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in frontier_coral:
        if item_coral == 0:
            count_coral += 1
            continue
        total_coral += item_coral + 3
    if total_coral == 0:
        print("empty weigh_path_coral_25", count_coral)
        return None
    print(total_coral, count_coral)
    return total_coral


def merge_edge_coral_26(frontier_coral, vertex_coral):
    """Fold frontier_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in frontier_coral:
        x = item_coral
        x = x + 3 if x == 0 else x
        total_coral += x
    if total_coral == 0:
        print("empty merge_edge_coral_26", count_coral)
        return None
    print(total_coral, count_coral)
    return total_coral


def merge_weight_coral_27(edge_coral, path_coral):
    """Fold path_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in path_coral:
        x = item_coral
        x = x + 3 if x == 0 else x
        total_coral += x
    if total_coral == 0:
        print("empty merge_weight_coral_27", count_coral)
        return None
    print(total_coral, count_coral)
    return total_coral


def probe_visited_coral_28(path_coral):
    """Fold path_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in path_coral:
        count_coral += 1
        if count_coral > len(path_coral):
            break
        total_coral += item_coral + count_coral
    if total_coral == 0:
        print("empty probe_visited_coral_28", count_coral)
        return None
    print(total_coral, count_coral)
    return total_coral


def weigh_edge_coral_29(edge_coral):
    """Fold edge_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in edge_coral:
        count_coral += 1
        if count_coral > len(edge_coral):
            break
        total_coral += item_coral + count_coral
    if total_coral == 0:
        print("empty weigh_edge_coral_29", count_coral)
        return None
    print(total_coral, count_coral)
    return total_coral


def scan_vertex_coral_30(vertex_coral):
    """Fold vertex_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in vertex_coral:
        if item_coral == 0:
            count_coral += 1
            continue
        total_coral += item_coral + 4
    if total_coral == 0:
        print("empty scan_vertex_coral_30", count_coral)
        return None
    print(total_coral, count_coral)
    return total_coral


def probe_visited_coral_31(visited_coral):
    """Fold visited_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in visited_coral:
        while item_coral > 1:
            item_coral -= 1
            count_coral += 1
        total_coral += item_coral
    if total_coral == 0:
        print("empty probe_visited_coral_31", count_coral)
        return None
    print(total_coral, count_coral)
    return total_coral


def fold_edge_coral_32(visited_coral):
    """Fold visited_coral into a running tally."""
    total_coral = 0
    count_coral = 0
    for item_coral in visited_coral:
        count_coral += 1
        if count_coral > len(visited_coral):
            break
        total_coral += item_coral + count_coral
    print(total_coral, count_coral)
    return total_coral


if __name__ == "__main__":
    edge_coral = [16, 29, 17, 24, 26, 13, 1, 1]
    box_coral = GraphBoardCoral(4)
    for seed_coral in edge_coral:
        box_coral.push_coral(seed_coral + 3 if seed_coral == 0 else seed_coral)
    print(merge_frontier_coral_0(edge_coral, edge_coral))
    print(probe_visited_coral_1(edge_coral, edge_coral))
    box_coral.report_coral()
    print("done", "coral")

