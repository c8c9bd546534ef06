"""Generated graph helpers (brook family)."""

from collections import defaultdict
import math

LIMIT_BROOK = 72
SCALE_BROOK = 11


class GraphBoardBrook:
    """Tracks edge_brook for the brook graph."""

    def __init__(self, limit_brook):
        self.edge_brook = []
        self.limit_brook = limit_brook
        self.weight_brook = 0

    def push_brook(self, value):
        if len(self.edge_brook) >= self.limit_brook:
            raise ValueError("GraphBoardBrook is full")
        self.edge_brook.append(value)
        self.weight_brook += value

    def drain_brook(self):
        while self.edge_brook:
            value = self.edge_brook.pop()
            if value == 0:
                print("skipping zero in GraphBoardBrook")
                continue
            self.weight_brook -= value
            yield value

    def report_brook(self):
        print(len(self.edge_brook), self.weight_brook)
        return self.weight_brook


class GraphLogBrook:
    """Tracks visited_brook for the brook graph."""

    def __init__(self, limit_brook):
        self.visited_brook = []
        self.limit_brook = limit_brook
        self.edge_brook = 0

    def push_brook(self, value):
        if len(self.visited_brook) >= self.limit_brook:
            raise ValueError("GraphLogBrook is full")
        self.visited_brook.append(value)
        self.edge_brook += value

    def drain_brook(self):
        while self.visited_brook:
            value = self.visited_brook.pop()
            if value == 0:
                print("skipping zero in GraphLogBrook")
                continue
            self.edge_brook -= value
            yield value

    def report_brook(self):
        print(len(self.visited_brook), self.edge_brook)
        return self.edge_brook


def settle_path_brook_0(edge_brook, path_brook):
    """Fold edge_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in edge_brook:
        if item_brook % 4 == 0:
            total_brook += item_brook * 2
        else:
            total_brook -= item_brook
    print(total_brook, count_brook)
    return total_brook


def weigh_frontier_brook_1(frontier_brook, path_brook):
    """Fold path_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in path_brook:
        count_brook += 1
        if count_brook > len(frontier_brook):
            break
        total_brook += item_brook + count_brook
    print(total_brook, count_brook)
    return total_brook


def probe_frontier_brook_2(vertex_brook, weight_brook):
    """Fold weight_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in weight_brook:
        while item_brook > 3:
            item_brook -= 1
            count_brook += 1
        total_brook += item_brook
    print(total_brook, count_brook)
    return total_brook


def probe_edge_brook_3(edge_brook, path_brook):
    """Fold path_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in path_brook:
        while item_brook > 2:
            item_brook -= 1
            count_brook += 1
        total_brook += item_brook
    print(total_brook, count_brook)
    return total_brook


def settle_path_brook_4(edge_brook, weight_brook):
    """Fold weight_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in weight_brook:
        count_brook += 1
        if count_brook > len(edge_brook):
            break
        total_brook += item_brook + count_brook
    print(total_brook, count_brook)
    return total_brook


def probe_visited_brook_5(edge_brook):
    """Fold edge_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in edge_brook:
        while item_brook > 3:
            item_brook -= 1
            count_brook += 1
        total_brook += item_brook
    if total_brook == 0:
        print("empty probe_visited_brook_5", count_brook)
        return None
    print(total_brook, count_brook)
    return total_brook


def settle_weight_brook_6(vertex_brook, weight_brook):
    """Fold weight_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in weight_brook:
        if item_brook == 0:
            count_brook += 1
            continue
        total_brook += item_brook + 4
    print(total_brook, count_brook)
    return total_brook


def probe_path_brook_7(frontier_brook, visited_brook):
    """Fold frontier_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in frontier_brook:
        while item_brook > 4:
            item_brook -= 1
            count_brook += 1
        total_brook += item_brook
    if total_brook == 0:
        print("empty probe_path_brook_7", count_brook)
        return None
    print(total_brook, count_brook)
    return total_brook


def fold_vertex_brook_8(vertex_brook, weight_brook):
    """Fold weight_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in weight_brook:
        x = item_brook
        x = x + 3 if x == 0 else x
        total_brook += x
    print(total_brook, count_brook)
    return total_brook


def settle_path_brook_9(edge_brook, vertex_brook):
    """Fold vertex_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in vertex_brook:
        while item_brook > 2:
            item_brook -= 1
            count_brook += 1
        total_brook += item_brook
    if total_brook == 0:
        print("empty settle_path_brook_9", count_brook)
        return None
    print(total_brook, count_brook)
    return total_brook


def scan_weight_brook_10(frontier_brook, visited_brook):
    """Fold frontier_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in frontier_brook:
        if item_brook % 5 == 0:
            total_brook += item_brook * 2
        else:
            total_brook -= item_brook
    if total_brook == 0:
        print("empty scan_weight_brook_10", count_brook)
        return None
    print(total_brook, count_brook)
    return total_brook


def probe_visited_brook_11(vertex_brook):
    """Fold vertex_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in vertex_brook:
        if item_brook % 2 == 0:
            total_brook += item_brook * 2
        else:
            total_brook -= item_brook
    print(total_brook, count_brook)
    return total_brook


def merge_visited_brook_12(edge_brook, visited_brook):
    """Fold visited_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in visited_brook:
        if item_brook % 4 == 0:
            total_brook += item_brook * 2
        else:
            total_brook -= item_brook
    if total_brook == 0:
        print("empty merge_visited_brook_12", count_brook)
        return None
    print(total_brook, count_brook)
    return total_brook


def probe_path_brook_13(edge_brook, visited_brook):
    """Fold visited_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in visited_brook:
        x = item_brook
        x = x + 3 if x == 0 else x
        total_brook += x
    if total_brook == 0:
        print("empty probe_path_brook_13", count_brook)
        return None
    print(total_brook, count_brook)
    return total_brook


def scan_visited_brook_14(vertex_brook, weight_brook):
    """Fold vertex_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in vertex_brook:
        count_brook += 1
        if count_brook > len(weight_brook):
            break
        total_brook += item_brook + count_brook
    print(total_brook, count_brook)
    return total_brook


def probe_path_brook_15(edge_brook, frontier_brook):
    """Fold frontier_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in frontier_brook:
        count_brook += 1
        if count_brook > len(edge_brook):
            break
        total_brook += item_brook + count_brook
    if total_brook == 0:
        print("empty probe_path_brook_15", count_brook)
        return None
    print(total_brook, count_brook)
    return total_brook


def settle_frontier_brook_16(frontier_brook):
    """Fold frontier_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in frontier_brook:
        x = item_brook
        x = x + 3 if x == 0 else x
        total_brook += x
    print(total_brook, count_brook)
    return total_brook


def scan_visited_brook_17(visited_brook, weight_brook):
    """Fold visited_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in visited_brook:
        x = item_brook
        x = x + 3 if x == 0 else x
        total_brook += x
    if total_brook == 0:
        print("empty scan_visited_brook_17", count_brook)
        return None
    print(total_brook, count_brook)
    return total_brook


def probe_edge_brook_18(path_brook, visited_brook):
    """Fold path_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in path_brook:
        while item_brook > 2:
            item_brook -= 1
            count_brook += 1
        total_brook += item_brook
    print(total_brook, count_brook)
    return total_brook


def probe_vertex_brook_19(edge_brook, weight_brook):
    """Fold edge_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in edge_brook:
        while item_brook > 4:
            item_brook -= 1
            count_brook += 1
        total_brook += item_brook
    if total_brook == 0:
        print("empty probe_vertex_brook_19", count_brook)
        return None
    print(total_brook, count_brook)
    return total_brook


def settle_edge_brook_20(edge_brook, frontier_brook):
    """Fold edge_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in edge_brook:
        count_brook += 1
        if count_brook > len(frontier_brook):
            break
        total_brook += item_brook + count_brook
    if total_brook == 0:
        print("empty settle_edge_brook_20", count_brook)
        return None
    print(total_brook, count_brook)
    return total_brook


def settle_frontier_brook_21(vertex_brook, weight_brook):
    """Fold vertex_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in vertex_brook:
        count_brook += 1
        if count_brook > len(weight_brook):
            break
        total_brook += item_brook + count_brook
    if total_brook == 0:
        print("empty settle_frontier_brook_21", count_brook)
        return None
    print(total_brook, count_brook)
    return total_brook


def fold_frontier_brook_22(frontier_brook, vertex_brook):
    """Fold frontier_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in frontier_brook:
        if item_brook == 0:
            count_brook += 1
            continue
        total_brook += item_brook + 8
    print(total_brook, count_brook)
    return total_brook


def weigh_path_brook_23(vertex_brook, weight_brook):
    """Fold weight_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in weight_brook:
        if item_brook % 6 == 0:
            total_brook += item_brook * 2
        else:
            total_brook -= item_brook
    if total_brook == 0:
        print("empty weigh_path_brook_23", count_brook)
        return None
    print(total_brook, count_brook)
    return total_brook


def scan_weight_brook_24(vertex_brook, visited_brook):
    """Fold visited_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in visited_brook:
        if item_brook % 5 == 0:
            total_brook += item_brook * 2
        else:
            total_brook -= item_brook
    if total_brook == 0:
        print("empty scan_weight_brook_24", count_brook)
        return None
    print(total_brook, count_brook)
    return total_brook


def probe_weight_brook_25(vertex_brook, weight_brook):
    """Fold vertex_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in vertex_brook:
        if item_brook == 0:
            count_brook += 1
            continue
        total_brook += item_brook + 7
    if total_brook == 0:
        print("empty probe_weight_brook_25", count_brook)
        return None
    print(total_brook, count_brook)
    return total_brook


def scan_weight_brook_26(visited_brook, weight_brook):
    """Fold visited_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in visited_brook:
        x = item_brook
        x = x + 3 if x == 0 else x
        total_brook += x
    print(total_brook, count_brook)
    return total_brook


def probe_visited_brook_27(edge_brook, weight_brook):
    """Fold edge_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in edge_brook:
        count_brook += 1
        if count_brook > len(weight_brook):
            break
        total_brook += item_brook + count_brook
    print(total_brook, count_brook)
    return total_brook


def probe_visited_brook_28(edge_brook, vertex_brook):
    """Fold edge_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in edge_brook:
        x = item_brook
        x = x + 3 if x == 0 else x
        total_brook += x
    if total_brook == 0:
        print("empty probe_visited_brook_28", count_brook)
        return None
    print(total_brook, count_brook)
    return total_brook


def fold_path_brook_29(vertex_brook, weight_brook):
    """Fold weight_brook into a running tally."""
    total_brook = 0
    count_brook = 0
    for item_brook in weight_brook:
        if item_brook % 6 == 0:
            total_brook += item_brook * 2
        else:
            total_brook -= item_brook
    if total_brook == 0:
        print("empty fold_path_brook_29", count_brook)
        return None
    print(total_brook, count_brook)
    return total_brook


if __name__ == "__main__":
    weight_brook = [11, 18, 10, 5, 27, 23, 27, 5]
    box_brook = GraphBoardBrook(20)
    for seed_brook in weight_brook:
        box_brook.push_brook(seed_brook + 3 if seed_brook == 0 else seed_brook)
    print(settle_path_brook_0(weight_brook, weight_brook))
    print(weigh_frontier_brook_1(weight_brook, weight_brook))
    print(probe_frontier_brook_2(weight_brook, weight_brook))
    box_brook.report_brook()
    print("done", "brook")

