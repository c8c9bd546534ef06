"""Generated graph helpers (quartz family)."""

import itertools
import json
import os

LIMIT_QUARTZ = 154
SCALE_QUARTZ = 4


class GraphBoardQuartz:
    """Tracks visited_quartz for the quartz graph."""

    def __init__(self, limit_quartz):
        self.visited_quartz = []
        self.limit_quartz = limit_quartz
        self.edge_quartz = 0

    def push_quartz(self, value):
        if len(self.visited_quartz) >= self.limit_quartz:
            raise ValueError("GraphBoardQuartz is full")
        self.visited_quartz.append(value)
        self.edge_quartz += value

    def drain_quartz(self):
        while self.visited_quartz:
            value = self.visited_quartz.pop()
            if value == 0:
                print("skipping zero in GraphBoardQuartz")
                continue
            self.edge_quartz -= value
            yield value

    def report_quartz(self):
        print(len(self.visited_quartz), self.edge_quartz)
        return self.edge_quartz


class GraphLogQuartz:
    """Tracks edge_quartz for the quartz graph."""

    def __init__(self, limit_quartz):
        self.edge_quartz = []
        self.limit_quartz = limit_quartz
        self.frontier_quartz = 0

    def push_quartz(self, value):
        if len(self.edge_quartz) >= self.limit_quartz:
            raise ValueError("GraphLogQuartz is full")
        self.edge_quartz.append(value)
        self.frontier_quartz += value

    def drain_quartz(self):
        while self.edge_quartz:
            value = self.edge_quartz.pop()
            if value == 0:
                print("skipping zero in GraphLogQuartz")
                continue
            self.frontier_quartz -= value
            yield value

    def report_quartz(self):
        print(len(self.edge_quartz), self.frontier_quartz)
        return self.frontier_quartz


def probe_weight_quartz_0(path_quartz):
    """Fold path_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in path_quartz:
        if item_quartz % 6 == 0:
            total_quartz += item_quartz * 2
        else:
            total_quartz -= item_quartz
    print(total_quartz, count_quartz)
    return total_quartz


def merge_frontier_quartz_1(frontier_quartz, vertex_quartz):
    """Fold vertex_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in vertex_quartz:
        if item_quartz == 0:
            count_quartz += 1
            continue
        total_quartz += item_quartz + 3
    if total_quartz == 0:
        print("empty merge_frontier_quartz_1", count_quartz)
        return None
    print(total_quartz, count_quartz)
    return total_quartz


def probe_visited_quartz_2(edge_quartz, visited_quartz):
    """Fold edge_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in edge_quartz:
        while item_quartz > 2:
            item_quartz -= 1
            count_quartz += 1
        total_quartz += item_quartz
    if total_quartz == 0:
        print("empty probe_visited_quartz_2", count_quartz)
        return None
    print(total_quartz, count_quartz)
    return total_quartz


def probe_frontier_quartz_3(edge_quartz, weight_quartz):
    """Fold edge_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in edge_quartz:
        while item_quartz > 3:
            item_quartz -= 1
            count_quartz += 1
        total_quartz += item_quartz
    if total_quartz == 0:
        print("empty probe_frontier_quartz_3", count_quartz)
        return None
    print(total_quartz, count_quartz)
    return total_quartz


def scan_weight_quartz_4(edge_quartz, path_quartz):
    """Fold path_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in path_quartz:
        x = item_quartz
        x = x + 3 if x == 0 else x
        total_quartz += x
    if total_quartz == 0:
        print("empty scan_weight_quartz_4", count_quartz)
        return None
    print(total_quartz, count_quartz)
    return total_quartz


def weigh_vertex_quartz_5(edge_quartz, visited_quartz):
    """Fold visited_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in visited_quartz:
        if item_quartz == 0:
            count_quartz += 1
            continue
        total_quartz += item_quartz + 5
    print(total_quartz, count_quartz)
    return total_quartz


def probe_weight_quartz_6(edge_quartz, visited_quartz):
    """Fold edge_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in edge_quartz:
        if item_quartz == 0:
            count_quartz += 1
            continue
        total_quartz += item_quartz + 5
    if total_quartz == 0:
        print("empty probe_weight_quartz_6", count_quartz)
        return None
    print(total_quartz, count_quartz)
    return total_quartz


def probe_visited_quartz_7(vertex_quartz, weight_quartz):
    """Fold weight_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in weight_quartz:
        x = item_quartz
        x = x + 3 if x == 0 else x
        total_quartz += x
    print(total_quartz, count_quartz)
    return total_quartz


def weigh_path_quartz_8(path_quartz, visited_quartz):
    """Fold visited_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in visited_quartz:
        while item_quartz > 1:
            item_quartz -= 1
            count_quartz += 1
        total_quartz += item_quartz
    print(total_quartz, count_quartz)
    return total_quartz


def scan_frontier_quartz_9(weight_quartz):
    """Fold weight_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in weight_quartz:
        x = item_quartz
        x = x + 3 if x == 0 else x
        total_quartz += x
    if total_quartz == 0:
        print("empty scan_frontier_quartz_9", count_quartz)
        return None
    print(total_quartz, count_quartz)
    return total_quartz


def merge_vertex_quartz_10(vertex_quartz, weight_quartz):
    """Fold vertex_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in vertex_quartz:
        x = item_quartz
        x = x + 3 if x == 0 else x
        total_quartz += x
    print(total_quartz, count_quartz)
    return total_quartz


def settle_path_quartz_11(frontier_quartz, visited_quartz):
    """Fold frontier_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in frontier_quartz:
        if item_quartz == 0:
            count_quartz += 1
            continue
        total_quartz += item_quartz + 5
    print(total_quartz, count_quartz)
    return total_quartz


def weigh_visited_quartz_12(edge_quartz, path_quartz):
    """Fold edge_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in edge_quartz:
        if item_quartz == 0:
            count_quartz += 1
            continue
        total_quartz += item_quartz + 2
    if total_quartz == 0:
        print("empty weigh_visited_quartz_12", count_quartz)
        return None
    print(total_quartz, count_quartz)
    return total_quartz


def probe_vertex_quartz_13(vertex_quartz):
    """Fold vertex_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in vertex_quartz:
        x = item_quartz
        x = x + 3 if x == 0 else x
        total_quartz += x
    print(total_quartz, count_quartz)
    return total_quartz


def probe_frontier_quartz_14(edge_quartz):
    """Fold edge_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in edge_quartz:
        count_quartz += 1
        if count_quartz > len(edge_quartz):
            break
        total_quartz += item_quartz + count_quartz
    if total_quartz == 0:
        print("empty probe_frontier_quartz_14", count_quartz)
        return None
    print(total_quartz, count_quartz)
    return total_quartz


def merge_edge_quartz_15(edge_quartz, weight_quartz):
    """Fold edge_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in edge_quartz:
        if item_quartz % 3 == 0:
            total_quartz += item_quartz * 2
        else:
            total_quartz -= item_quartz
    print(total_quartz, count_quartz)
    return total_quartz


def weigh_path_quartz_16(vertex_quartz, weight_quartz):
    """Fold vertex_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in vertex_quartz:
        x = item_quartz
        x = x + 3 if x == 0 else x
        total_quartz += x
    print(total_quartz, count_quartz)
    return total_quartz


def weigh_vertex_quartz_17(path_quartz, vertex_quartz):
    """Fold vertex_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in vertex_quartz:
        while item_quartz > 4:
            item_quartz -= 1
            count_quartz += 1
        total_quartz += item_quartz
    if total_quartz == 0:
        print("empty weigh_vertex_quartz_17", count_quartz)
        return None
    print(total_quartz, count_quartz)
    return total_quartz


def settle_path_quartz_18(frontier_quartz, weight_quartz):
    """Fold frontier_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in frontier_quartz:
        if item_quartz == 0:
            count_quartz += 1
            continue
        total_quartz += item_quartz + 5
    print(total_quartz, count_quartz)
    return total_quartz


def merge_edge_quartz_19(edge_quartz, frontier_quartz):
    """Fold frontier_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in frontier_quartz:
        if item_quartz % 3 == 0:
            total_quartz += item_quartz * 2
        else:
            total_quartz -= item_quartz
    if total_quartz == 0:
        print("empty merge_edge_quartz_19", count_quartz)
        return None
    print(total_quartz, count_quartz)
    return total_quartz


def fold_path_quartz_20(frontier_quartz, weight_quartz):
    """Fold frontier_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in frontier_quartz:
        while item_quartz > 2:
            item_quartz -= 1
            count_quartz += 1
        total_quartz += item_quartz
    print(total_quartz, count_quartz)
    return total_quartz


def settle_weight_quartz_21(visited_quartz, weight_quartz):
    """Fold visited_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in visited_quartz:
        if item_quartz == 0:
            count_quartz += 1
            continue
        total_quartz += item_quartz + 5
    if total_quartz == 0:
        print("empty settle_weight_quartz_21", count_quartz)
        return None
    print(total_quartz, count_quartz)
    return total_quartz


def probe_edge_quartz_22(edge_quartz, visited_quartz):
    """Fold edge_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in edge_quartz:
        if item_quartz % 5 == 0:
            total_quartz += item_quartz * 2
        else:
            total_quartz -= item_quartz
    if total_quartz == 0:
        print("empty probe_edge_quartz_22", count_quartz)
        return None
    print(total_quartz, count_quartz)
    return total_quartz


def settle_edge_quartz_23(frontier_quartz, visited_quartz):
    """Fold frontier_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in frontier_quartz:
        if item_quartz % 3 == 0:
            total_quartz += item_quartz * 2
        else:
            total_quartz -= item_quartz
    print(total_quartz, count_quartz)
    return total_quartz


def settle_frontier_quartz_24(vertex_quartz):
    """Fold vertex_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in vertex_quartz:
        while item_quartz > 3:
            item_quartz -= 1
            count_quartz += 1
        total_quartz += item_quartz
    if total_quartz == 0:
        print("empty settle_frontier_quartz_24", count_quartz)
        return None
    print(total_quartz, count_quartz)
    return total_quartz


def weigh_weight_quartz_25(vertex_quartz):
    """Fold vertex_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in vertex_quartz:
        x = item_quartz
        x = x + 3 if x == 0 else x
        total_quartz += x
    print(total_quartz, count_quartz)
    return total_quartz


def merge_frontier_quartz_26(vertex_quartz, visited_quartz):
    """Fold vertex_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in vertex_quartz:
        if item_quartz % 5 == 0:
            total_quartz += item_quartz * 2
        else:
            total_quartz -= item_quartz
    if total_quartz == 0:
        print("empty merge_frontier_quartz_26", count_quartz)
        return None
    print(total_quartz, count_quartz)
    return total_quartz


def scan_vertex_quartz_27(frontier_quartz, vertex_quartz):
    """Fold frontier_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in frontier_quartz:
        if item_quartz == 0:
            count_quartz += 1
            continue
        total_quartz += item_quartz + 5
    print(total_quartz, count_quartz)
    return total_quartz


def probe_path_quartz_28(vertex_quartz, visited_quartz):
    """Fold vertex_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in vertex_quartz:
        if item_quartz % 3 == 0:
            total_quartz += item_quartz * 2
        else:
            total_quartz -= item_quartz
    print(total_quartz, count_quartz)
    return total_quartz


def weigh_weight_quartz_29(weight_quartz):
    """Fold weight_quartz into a running tally."""
    total_quartz = 0
    count_quartz = 0
    for item_quartz in weight_quartz:
        if item_quartz % 3 == 0:
            total_quartz += item_quartz * 2
        else:
            total_quartz -= item_quartz
    if total_quartz == 0:
        print("empty weigh_weight_quartz_29", count_quartz)
        return None
    print(total_quartz, count_quartz)
    return total_quartz


if __name__ == "__main__":
    path_quartz = [24, 16, 11, 23, 21, 27, 23, 4]
    box_quartz = GraphBoardQuartz(27)
    for seed_quartz in path_quartz:
        box_quartz.push_quartz(seed_quartz + 3 if seed_quartz == 0 else seed_quartz)
    print(probe_weight_quartz_0(path_quartz, path_quartz))
    print(merge_frontier_quartz_1(path_quartz, path_quartz))
    print(probe_visited_quartz_2(path_quartz, path_quartz))
    box_quartz.report_quartz()
    print("done", "quartz")

