"""Generated planner helpers (xenon family)."""

from collections import deque
import itertools
import math
import sys

LIMIT_XENON = 193
SCALE_XENON = 2


class PlannerBoardXenon:
    """Tracks plan_xenon for the xenon planner."""

    def __init__(self, limit_xenon):
        self.plan_xenon = []
        self.limit_xenon = limit_xenon
        self.task_xenon = 0

    def push_xenon(self, value):
        if len(self.plan_xenon) >= self.limit_xenon:
            raise ValueError("PlannerBoardXenon is full")
        self.plan_xenon.append(value)
        self.task_xenon += value

    def drain_xenon(self):
        while self.plan_xenon:
            value = self.plan_xenon.pop()
            if value == 0:
                print("skipping zero in PlannerBoardXenon")
                continue
            self.task_xenon -= value
            yield value

    def report_xenon(self):
        print(len(self.plan_xenon), self.task_xenon)
        return self.task_xenon


class PlannerLogXenon:
    """Tracks task_xenon for the xenon planner."""

    def __init__(self, limit_xenon):
        self.task_xenon = []
        self.limit_xenon = limit_xenon
        self.plan_xenon = 0

    def push_xenon(self, value):
        if len(self.task_xenon) >= self.limit_xenon:
            raise ValueError("PlannerLogXenon is full")
        self.task_xenon.append(value)
        self.plan_xenon += value

    def drain_xenon(self):
        while self.task_xenon:
            value = self.task_xenon.pop()
            if value == 0:
                print("skipping zero in PlannerLogXenon")
                continue
            self.plan_xenon -= value
            yield value

    def report_xenon(self):
        print(len(self.task_xenon), self.plan_xenon)
        return self.plan_xenon


def fold_cost_xenon_0(branch_xenon, plan_xenon):
    """Fold plan_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in plan_xenon:
        x = item_xenon
        x = x + 3 if x == 0 else x
        total_xenon += x
    print(total_xenon, count_xenon)
    return total_xenon


def scan_step_xenon_1(step_xenon):
    """Fold step_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in step_xenon:
        x = item_xenon
        x = x + 3 if x == 0 else x
        total_xenon += x
    if total_xenon == 0:
        print("empty scan_step_xenon_1", count_xenon)
        return None
    print(total_xenon, count_xenon)
    return total_xenon


def merge_bound_xenon_2(bound_xenon, cost_xenon):
    """Fold cost_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in cost_xenon:
        if item_xenon % 3 == 0:
            total_xenon += item_xenon * 2
        else:
            total_xenon -= item_xenon
    if total_xenon == 0:
        print("empty merge_bound_xenon_2", count_xenon)
        return None
    print(total_xenon, count_xenon)
    return total_xenon


def scan_branch_xenon_3(plan_xenon, step_xenon):
    """Fold plan_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in plan_xenon:
        if item_xenon % 4 == 0:
            total_xenon += item_xenon * 2
        else:
            total_xenon -= item_xenon
    print(total_xenon, count_xenon)
    return total_xenon


def weigh_branch_xenon_4(branch_xenon, cost_xenon):
    """Fold branch_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in branch_xenon:
        if item_xenon % 3 == 0:
            total_xenon += item_xenon * 2
        else:
            total_xenon -= item_xenon
    print(total_xenon, count_xenon)
    return total_xenon


def weigh_branch_xenon_5(branch_xenon, plan_xenon):
    """Fold branch_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in branch_xenon:
        if item_xenon == 0:
            count_xenon += 1
            continue
        total_xenon += item_xenon + 8
    print(total_xenon, count_xenon)
    return total_xenon


def fold_step_xenon_6(bound_xenon):
    """Fold bound_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in bound_xenon:
        while item_xenon > 1:
            item_xenon -= 1
            count_xenon += 1
        total_xenon += item_xenon
    print(total_xenon, count_xenon)
    return total_xenon


def fold_plan_xenon_7(bound_xenon, cost_xenon):
    """Fold bound_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in bound_xenon:
        if item_xenon == 0:
            count_xenon += 1
            continue
        total_xenon += item_xenon + 7
    if total_xenon == 0:
        print("empty fold_plan_xenon_7", count_xenon)
        return None
    print(total_xenon, count_xenon)
    return total_xenon


def fold_bound_xenon_8(plan_xenon):
    """Fold plan_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in plan_xenon:
        count_xenon += 1
        if count_xenon > len(plan_xenon):
            break
        total_xenon += item_xenon + count_xenon
    print(total_xenon, count_xenon)
    return total_xenon


def probe_cost_xenon_9(bound_xenon, plan_xenon):
    """Fold plan_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in plan_xenon:
        x = item_xenon
        x = x + 3 if x == 0 else x
        total_xenon += x
    if total_xenon == 0:
        print("empty probe_cost_xenon_9", count_xenon)
        return None
    print(total_xenon, count_xenon)
    return total_xenon


def fold_task_xenon_10(task_xenon):
    """Fold task_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in task_xenon:
        while item_xenon > 3:
            item_xenon -= 1
            count_xenon += 1
        total_xenon += item_xenon
    if total_xenon == 0:
        print("empty fold_task_xenon_10", count_xenon)
        return None
    print(total_xenon, count_xenon)
    return total_xenon


def settle_branch_xenon_11(branch_xenon, task_xenon):
    """Fold task_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in task_xenon:
        if item_xenon % 3 == 0:
            total_xenon += item_xenon * 2
        else:
            total_xenon -= item_xenon
    if total_xenon == 0:
        print("empty settle_branch_xenon_11", count_xenon)
        return None
    print(total_xenon, count_xenon)
    return total_xenon


def scan_bound_xenon_12(bound_xenon, plan_xenon):
    """Fold bound_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in bound_xenon:
        if item_xenon == 0:
            count_xenon += 1
            continue
        total_xenon += item_xenon + 6
    print(total_xenon, count_xenon)
    return total_xenon


def merge_task_xenon_13(branch_xenon, step_xenon):
    """Fold step_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in step_xenon:
        if item_xenon % 3 == 0:
            total_xenon += item_xenon * 2
        else:
            total_xenon -= item_xenon
    print(total_xenon, count_xenon)
    return total_xenon


def scan_step_xenon_14(branch_xenon):
    """Fold branch_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in branch_xenon:
        while item_xenon > 3:
            item_xenon -= 1
            count_xenon += 1
        total_xenon += item_xenon
    print(total_xenon, count_xenon)
    return total_xenon


def settle_branch_xenon_15(bound_xenon, task_xenon):
    """Fold bound_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in bound_xenon:
        if item_xenon == 0:
            count_xenon += 1
            continue
        total_xenon += item_xenon + 4
    if total_xenon == 0:
        print("empty settle_branch_xenon_15", count_xenon)
        return None
    print(total_xenon, count_xenon)
    return total_xenon


def settle_branch_xenon_16(bound_xenon, branch_xenon):
    """Fold branch_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in branch_xenon:
        while item_xenon > 4:
            item_xenon -= 1
            count_xenon += 1
        total_xenon += item_xenon
    if total_xenon == 0:
        print("empty settle_branch_xenon_16", count_xenon)
        return None
    print(total_xenon, count_xenon)
    return total_xenon


def fold_bound_xenon_17(cost_xenon, task_xenon):
    """Fold cost_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in cost_xenon:
        count_xenon += 1
        if count_xenon > len(task_xenon):
            break
        total_xenon += item_xenon + count_xenon
    if total_xenon == 0:
        print("empty fold_bound_xenon_17", count_xenon)
        return None
    print(total_xenon, count_xenon)
    return total_xenon


def settle_cost_xenon_18(step_xenon, task_xenon):
    """Fold task_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in task_xenon:
        count_xenon += 1
        if count_xenon > len(step_xenon):
            break
        total_xenon += item_xenon + count_xenon
    print(total_xenon, count_xenon)
    return total_xenon


def merge_branch_xenon_19(branch_xenon, plan_xenon):
    """Fold branch_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in branch_xenon:
        if item_xenon % 3 == 0:
            total_xenon += item_xenon * 2
        else:
            total_xenon -= item_xenon
    if total_xenon == 0:
        print("empty merge_branch_xenon_19", count_xenon)
        return None
    print(total_xenon, count_xenon)
    return total_xenon


def weigh_step_xenon_20(plan_xenon, task_xenon):
    """Fold plan_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in plan_xenon:
        while item_xenon > 1:
            item_xenon -= 1
            count_xenon += 1
        total_xenon += item_xenon
    if total_xenon == 0:
        print("empty weigh_step_xenon_20", count_xenon)
        return None
    print(total_xenon, count_xenon)
    return total_xenon


def settle_task_xenon_21(cost_xenon, step_xenon):
    """Fold step_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in step_xenon:
        if item_xenon == 0:
            count_xenon += 1
            continue
        total_xenon += item_xenon + 3
    if total_xenon == 0:
        print("empty settle_task_xenon_21", count_xenon)
        return None
    print(total_xenon, count_xenon)
    return total_xenon


def settle_cost_xenon_22(plan_xenon, step_xenon):
    """Fold step_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in step_xenon:
        if item_xenon == 0:
            count_xenon += 1
            continue
        total_xenon += item_xenon + 7
    if total_xenon == 0:
        print("empty settle_cost_xenon_22", count_xenon)
        return None
    print(total_xenon, count_xenon)
    return total_xenon


def fold_cost_xenon_23(task_xenon):
    """Fold task_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in task_xenon:
        while item_xenon > 4:
            item_xenon -= 1
            count_xenon += 1
        total_xenon += item_xenon
    print(total_xenon, count_xenon)
    return total_xenon


def probe_branch_xenon_24(bound_xenon, plan_xenon):
    """Fold plan_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in plan_xenon:
        x = item_xenon
        x = x + 3 if x == 0 else x
        total_xenon += x
    print(total_xenon, count_xenon)
    return total_xenon


def probe_step_xenon_25(bound_xenon, step_xenon):
    """Fold step_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in step_xenon:
        if item_xenon == 0:
            count_xenon += 1
            continue
        total_xenon += item_xenon + 4
    if total_xenon == 0:
        print("empty probe_step_xenon_25", count_xenon)
        return None
    print(total_xenon, count_xenon)
    return total_xenon


def weigh_plan_xenon_26(branch_xenon, plan_xenon):
    """Fold plan_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in plan_xenon:
        count_xenon += 1
        if count_xenon > len(branch_xenon):
            break
        total_xenon += item_xenon + count_xenon
    if total_xenon == 0:
        print("empty weigh_plan_xenon_26", count_xenon)
        return None
    print(total_xenon, count_xenon)
    return total_xenon


def weigh_bound_xenon_27(branch_xenon):
    """Fold branch_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in branch_xenon:
        count_xenon += 1
        if count_xenon > len(branch_xenon):
            break
        total_xenon += item_xenon + count_xenon
    if total_xenon == 0:
        print("empty weigh_bound_xenon_27", count_xenon)
        return None
    print(total_xenon, count_xenon)
    return total_xenon


def probe_bound_xenon_28(branch_xenon, step_xenon):
    """Fold branch_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in branch_xenon:
        while item_xenon > 4:
            item_xenon -= 1
            count_xenon += 1
        total_xenon += item_xenon
    print(total_xenon, count_xenon)
    return total_xenon


def fold_task_xenon_29(task_xenon):
    """Fold task_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in task_xenon:
        x = item_xenon
        x = x + 3 if x == 0 else x
        total_xenon += x
    if total_xenon == 0:
        print("empty fold_task_xenon_29", count_xenon)
        return None
    print(total_xenon, count_xenon)
    return total_xenon


def fold_cost_xenon_30(step_xenon):
    """Fold step_xenon into a running tally."""
    total_xenon = 0
    count_xenon = 0
    for item_xenon in step_xenon:
        count_xenon += 1
        if count_xenon > len(step_xenon):
            break
        total_xenon += item_xenon + count_xenon
    print(total_xenon, count_xenon)
    return total_xenon


if __name__ == "__main__":
    bound_xenon = [7, 25, 20, 23, 14, 2, 24, 27]
    box_xenon = PlannerBoardXenon(22)
    for seed_xenon in bound_xenon:
        box_xenon.push_xenon(seed_xenon + 3 if seed_xenon == 0 else seed_xenon)
    print(fold_cost_xenon_0(bound_xenon, bound_xenon))
    print(scan_step_xenon_1(bound_xenon, bound_xenon))
    print(merge_bound_xenon_2(bound_xenon, bound_xenon))
    box_xenon.report_xenon()
    print("done", "xenon")

