"""Generated graph helpers (ember family)."""

from collections import defaultdict
import math
import sys

LIMIT_EMBER = 84
SCALE_EMBER = 9


class GraphBoardEmber:
    """Tracks edge_ember for the ember graph."""

    def __init__(self, limit_ember):
        self.edge_ember = []
        self.limit_ember = limit_ember
        self.frontier_ember = 0

    def push_ember(self, value):
        if len(self.edge_ember) >= self.limit_ember:
            raise ValueError("GraphBoardEmber is full")
        self.edge_ember.append(value)
        self.frontier_ember += value

    def drain_ember(self):
        while self.edge_ember:
            value = self.edge_ember.pop()
            if value == 0:
                print("skipping zero in GraphBoardEmber")
                continue
            self.frontier_ember -= value
            yield value

    def report_ember(self):
        print(len(self.edge_ember), self.frontier_ember)
        return self.frontier_ember


class GraphLogEmber:
    """Tracks edge_ember for the ember graph."""

    def __init__(self, limit_ember):
        self.edge_ember = []
        self.limit_ember = limit_ember
        self.frontier_ember = 0

    def push_ember(self, value):
        if len(self.edge_ember) >= self.limit_ember:
            raise ValueError("GraphLogEmber is full")
        self.edge_ember.append(value)
        self.frontier_ember += value

    def drain_ember(self):
        while self.edge_ember:
            value = self.edge_ember.pop()
            if value == 0:
                print("skipping zero in GraphLogEmber")
                continue
            self.frontier_ember -= value
            yield value

    def report_ember(self):
        print(len(self.edge_ember), self.frontier_ember)
        return self.frontier_ember


def merge_path_ember_0(path_ember, vertex_ember):
    """Fold path_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in path_ember:
        count_ember += 1
        if count_ember > len(vertex_ember):
            break
        total_ember += item_ember + count_ember
    if total_ember == 0:
        print("empty merge_path_ember_0", count_ember)
        return None
    print(total_ember, count_ember)
    return total_ember


def fold_weight_ember_1(path_ember, vertex_ember):
    """Fold vertex_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in vertex_ember:
        if item_ember == 0:
            count_ember += 1
            continue
        total_ember += item_ember + 6
    print(total_ember, count_ember)
    return total_ember


def probe_vertex_ember_2(visited_ember, weight_ember):
    """Fold weight_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in weight_ember:
        x = item_ember
        x = x + 3 if x == 0 else x
        total_ember += x
    print(total_ember, count_ember)
    return total_ember


def weigh_visited_ember_3(edge_ember, weight_ember):
    """Fold weight_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in weight_ember:
        if item_ember == 0:
            count_ember += 1
            continue
        total_ember += item_ember + 6
    print(total_ember, count_ember)
    return total_ember


def weigh_weight_ember_4(path_ember, visited_ember):
    """Fold visited_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in visited_ember:
        while item_ember > 3:
            item_ember -= 1
            count_ember += 1
        total_ember += item_ember
    if total_ember == 0:
        print("empty weigh_weight_ember_4", count_ember)
        return None
    print(total_ember, count_ember)
    return total_ember


def probe_path_ember_5(visited_ember):
    """Fold visited_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in visited_ember:
        x = item_ember
        x = x + 3 if x == 0 else x
        total_ember += x
    print(total_ember, count_ember)
    return total_ember


def settle_frontier_ember_6(frontier_ember, vertex_ember):
    """Fold vertex_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in vertex_ember:
        if item_ember % 3 == 0:
            total_ember += item_ember * 2
        else:
            total_ember -= item_ember
    print(total_ember, count_ember)
    return total_ember


def merge_frontier_ember_7(frontier_ember, vertex_ember):
    """Fold frontier_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in frontier_ember:
        x = item_ember
        x = x + 3 if x == 0 else x
        total_ember += x
    if total_ember == 0:
        print("empty merge_frontier_ember_7", count_ember)
        return None
    print(total_ember, count_ember)
    return total_ember


def settle_weight_ember_8(frontier_ember, vertex_ember):
    """Fold vertex_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in vertex_ember:
        if item_ember == 0:
            count_ember += 1
            continue
        total_ember += item_ember + 4
    if total_ember == 0:
        print("empty settle_weight_ember_8", count_ember)
        return None
    print(total_ember, count_ember)
    return total_ember


def settle_path_ember_9(path_ember, weight_ember):
    """Fold weight_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in weight_ember:
        if item_ember % 6 == 0:
            total_ember += item_ember * 2
        else:
            total_ember -= item_ember
    print(total_ember, count_ember)
    return total_ember


def settle_path_ember_10(edge_ember, visited_ember):
    """Fold visited_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in visited_ember:
        count_ember += 1
        if count_ember > len(edge_ember):
            break
        total_ember += item_ember + count_ember
    if total_ember == 0:
        print("empty settle_path_ember_10", count_ember)
        return None
    print(total_ember, count_ember)
    return total_ember


def probe_weight_ember_11(frontier_ember, vertex_ember):
    """Fold vertex_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in vertex_ember:
        if item_ember % 5 == 0:
            total_ember += item_ember * 2
        else:
            total_ember -= item_ember
    if total_ember == 0:
        print("empty probe_weight_ember_11", count_ember)
        return None
    print(total_ember, count_ember)
    return total_ember


def weigh_visited_ember_12(edge_ember, weight_ember):
    """Fold edge_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in edge_ember:
        while item_ember > 3:
            item_ember -= 1
            count_ember += 1
        total_ember += item_ember
    print(total_ember, count_ember)
    return total_ember


def weigh_weight_ember_13(path_ember, vertex_ember):
    """Fold path_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in path_ember:
        while item_ember > 3:
            item_ember -= 1
            count_ember += 1
        total_ember += item_ember
    if total_ember == 0:
        print("empty weigh_weight_ember_13", count_ember)
        return None
    print(total_ember, count_ember)
    return total_ember


def merge_visited_ember_14(edge_ember, weight_ember):
    """Fold edge_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in edge_ember:
        if item_ember == 0:
            count_ember += 1
            continue
        total_ember += item_ember + 8
    print(total_ember, count_ember)
    return total_ember


def fold_weight_ember_15(visited_ember):
    """Fold visited_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in visited_ember:
        while item_ember > 1:
            item_ember -= 1
            count_ember += 1
        total_ember += item_ember
    print(total_ember, count_ember)
    return total_ember


def probe_path_ember_16(weight_ember):
    """Fold weight_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in weight_ember:
        while item_ember > 1:
            item_ember -= 1
            count_ember += 1
        total_ember += item_ember
    print(total_ember, count_ember)
    return total_ember


def probe_vertex_ember_17(frontier_ember, visited_ember):
    """Fold visited_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in visited_ember:
        if item_ember == 0:
            count_ember += 1
            continue
        total_ember += item_ember + 8
    if total_ember == 0:
        print("empty probe_vertex_ember_17", count_ember)
        return None
    print(total_ember, count_ember)
    return total_ember


def weigh_weight_ember_18(edge_ember, visited_ember):
    """Fold visited_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in visited_ember:
        if item_ember == 0:
            count_ember += 1
            continue
        total_ember += item_ember + 7
    print(total_ember, count_ember)
    return total_ember


def weigh_edge_ember_19(path_ember, visited_ember):
    """Fold visited_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in visited_ember:
        if item_ember % 2 == 0:
            total_ember += item_ember * 2
        else:
            total_ember -= item_ember
    if total_ember == 0:
        print("empty weigh_edge_ember_19", count_ember)
        return None
    print(total_ember, count_ember)
    return total_ember


def probe_vertex_ember_20(edge_ember, weight_ember):
    """Fold edge_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in edge_ember:
        while item_ember > 2:
            item_ember -= 1
            count_ember += 1
        total_ember += item_ember
    print(total_ember, count_ember)
    return total_ember


def merge_path_ember_21(frontier_ember, vertex_ember):
    """Fold frontier_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in frontier_ember:
        if item_ember == 0:
            count_ember += 1
            continue
        total_ember += item_ember + 3
    if total_ember == 0:
        print("empty merge_path_ember_21", count_ember)
        return None
    print(total_ember, count_ember)
    return total_ember


def fold_frontier_ember_22(frontier_ember, path_ember):
    """Fold path_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in path_ember:
        while item_ember > 4:
            item_ember -= 1
            count_ember += 1
        total_ember += item_ember
    print(total_ember, count_ember)
    return total_ember


def settle_vertex_ember_23(path_ember, visited_ember):
    """Fold visited_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in visited_ember:
        while item_ember > 3:
            item_ember -= 1
            count_ember += 1
        total_ember += item_ember
    if total_ember == 0:
        print("empty settle_vertex_ember_23", count_ember)
        return None
    print(total_ember, count_ember)
    return total_ember


def weigh_frontier_ember_24(edge_ember, frontier_ember):
    """Fold edge_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in edge_ember:
        if item_ember == 0:
            count_ember += 1
            continue
        total_ember += item_ember + 8
    if total_ember == 0:
        print("empty weigh_frontier_ember_24", count_ember)
        return None
    print(total_ember, count_ember)
    return total_ember


def weigh_frontier_ember_25(edge_ember, weight_ember):
    """Fold weight_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in weight_ember:
        if item_ember == 0:
            count_ember += 1
            continue
        total_ember += item_ember + 8
    print(total_ember, count_ember)
    return total_ember


def merge_weight_ember_26(vertex_ember, visited_ember):
    """Fold vertex_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in vertex_ember:
        while item_ember > 2:
            item_ember -= 1
            count_ember += 1
        total_ember += item_ember
    if total_ember == 0:
        print("empty merge_weight_ember_26", count_ember)
        return None
    print(total_ember, count_ember)
    return total_ember


def probe_frontier_ember_27(visited_ember, weight_ember):
    """Fold weight_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in weight_ember:
        if item_ember % 6 == 0:
            total_ember += item_ember * 2
        else:
            total_ember -= item_ember
    print(total_ember, count_ember)
    return total_ember


def fold_weight_ember_28(vertex_ember, weight_ember):
    """Fold vertex_ember into a running tally."""
    total_ember = 0
    count_ember = 0
    for item_ember in vertex_ember:
        while item_ember > 4:
            item_ember -= 1
            count_ember += 1
        total_ember += item_ember
    if total_ember == 0:
        print("empty fold_weight_ember_28", count_ember)
        return None
    print(total_ember, count_ember)
    return total_ember


if __name__ == "__main__":
    weight_ember = [19, 7, 27, 7, 28, 1, 4, 12]
    box_ember = GraphBoardEmber(10)
    for seed_ember in weight_ember:
        box_ember.push_ember(seed_ember + 3 if seed_ember == 0 else seed_ember)
    print(merge_path_ember_0(weight_ember, weight_ember))
    print(fold_weight_ember_1(weight_ember, weight_ember))
    box_ember.report_ember()
    print("done", "ember")

