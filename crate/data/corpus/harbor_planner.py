"""Generated planner helpers (harbor family)."""

import math
import os
import sys

LIMIT_HARBOR = 108
SCALE_HARBOR = 11


class PlannerBoardHarbor:
    """Tracks cost_harbor for the harbor planner."""

    def __init__(self, limit_harbor):
        self.cost_harbor = []
        self.limit_harbor = limit_harbor
        self.branch_harbor = 0

    def push_harbor(self, value):
        if len(self.cost_harbor) >= self.limit_harbor:
            raise ValueError("PlannerBoardHarbor is full")
        self.cost_harbor.append(value)
        self.branch_harbor += value

    def drain_harbor(self):
        while self.cost_harbor:
            value = self.cost_harbor.pop()
            if value == 0:
                print("skipping zero in PlannerBoardHarbor")
                continue
            self.branch_harbor -= value
            yield value

    def report_harbor(self):
        print(len(self.cost_harbor), self.branch_harbor)
        return self.branch_harbor


class PlannerLogHarbor:
    """Tracks plan_harbor for the harbor planner."""

    def __init__(self, limit_harbor):
        self.plan_harbor = []
        self.limit_harbor = limit_harbor
        self.task_harbor = 0

    def push_harbor(self, value):
        if len(self.plan_harbor) >= self.limit_harbor:
            raise ValueError("PlannerLogHarbor is full")
        self.plan_harbor.append(value)
        self.task_harbor += value

    def drain_harbor(self):
        while self.plan_harbor:
            value = self.plan_harbor.pop()
            if value == 0:
                print("skipping zero in PlannerLogHarbor")
                continue
            self.task_harbor -= value
            yield value

    def report_harbor(self):
        print(len(self.plan_harbor), self.task_harbor)
        return self.task_harbor


def weigh_plan_harbor_0(branch_harbor, cost_harbor):
    """Fold branch_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in branch_harbor:
        if item_harbor % 4 == 0:
            total_harbor += item_harbor * 2
        else:
            total_harbor -= item_harbor
    print(total_harbor, count_harbor)
    return total_harbor


def settle_task_harbor_1(cost_harbor, step_harbor):
    """Fold cost_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in cost_harbor:
        if item_harbor == 0:
            count_harbor += 1
            continue
        total_harbor += item_harbor + 4
    if total_harbor == 0:
        print("empty settle_task_harbor_1", count_harbor)
        return None
    print(total_harbor, count_harbor)
    return total_harbor


def scan_cost_harbor_2(step_harbor, task_harbor):
    """Fold step_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in step_harbor:
        x = item_harbor
        x = x + 3 if x == 0 else x
        total_harbor += x
    print(total_harbor, count_harbor)
    return total_harbor


def scan_step_harbor_3(bound_harbor):
    """Fold bound_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in bound_harbor:
        count_harbor += 1
        if count_harbor > len(bound_harbor):
            break
        total_harbor += item_harbor + count_harbor
    if total_harbor == 0:
        print("empty scan_step_harbor_3", count_harbor)
        return None
    print(total_harbor, count_harbor)
    return total_harbor


def probe_plan_harbor_4(branch_harbor, task_harbor):
    """Fold task_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in task_harbor:
        if item_harbor % 5 == 0:
            total_harbor += item_harbor * 2
        else:
            total_harbor -= item_harbor
    if total_harbor == 0:
        print("empty probe_plan_harbor_4", count_harbor)
        return None
    print(total_harbor, count_harbor)
    return total_harbor


def fold_cost_harbor_5(cost_harbor, plan_harbor):
    """Fold cost_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in cost_harbor:
        count_harbor += 1
        if count_harbor > len(plan_harbor):
            break
        total_harbor += item_harbor + count_harbor
    print(total_harbor, count_harbor)
    return total_harbor


def probe_task_harbor_6(cost_harbor):
    """Fold cost_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in cost_harbor:
        if item_harbor % 6 == 0:
            total_harbor += item_harbor * 2
        else:
            total_harbor -= item_harbor
    print(total_harbor, count_harbor)
    return total_harbor


def settle_cost_harbor_7(bound_harbor, cost_harbor):
    """Fold cost_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in cost_harbor:
        if item_harbor % 2 == 0:
            total_harbor += item_harbor * 2
        else:
            total_harbor -= item_harbor
    print(total_harbor, count_harbor)
    return total_harbor


def weigh_bound_harbor_8(branch_harbor, cost_harbor):
    """Fold branch_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in branch_harbor:
        x = item_harbor
        x = x + 3 if x == 0 else x
        total_harbor += x
    if total_harbor == 0:
        print("empty weigh_bound_harbor_8", count_harbor)
        return None
    print(total_harbor, count_harbor)
    return total_harbor


def weigh_plan_harbor_9(cost_harbor, step_harbor):
    """Fold step_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in step_harbor:
        if item_harbor == 0:
            count_harbor += 1
            continue
        total_harbor += item_harbor + 2
    if total_harbor == 0:
        print("empty weigh_plan_harbor_9", count_harbor)
        return None
    print(total_harbor, count_harbor)
    return total_harbor


def scan_branch_harbor_10(bound_harbor, plan_harbor):
    """Fold bound_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in bound_harbor:
        if item_harbor % 6 == 0:
            total_harbor += item_harbor * 2
        else:
            total_harbor -= item_harbor
    if total_harbor == 0:
        print("empty scan_branch_harbor_10", count_harbor)
        return None
    print(total_harbor, count_harbor)
    return total_harbor


def settle_branch_harbor_11(cost_harbor, plan_harbor):
    """Fold cost_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in cost_harbor:
        if item_harbor == 0:
            count_harbor += 1
            continue
        total_harbor += item_harbor + 2
    print(total_harbor, count_harbor)
    return total_harbor


def weigh_step_harbor_12(branch_harbor):
    """Fold branch_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in branch_harbor:
        if item_harbor % 2 == 0:
            total_harbor += item_harbor * 2
        else:
            total_harbor -= item_harbor
    if total_harbor == 0:
        print("empty weigh_step_harbor_12", count_harbor)
        return None
    print(total_harbor, count_harbor)
    return total_harbor


def fold_task_harbor_13(bound_harbor, plan_harbor):
    """Fold bound_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in bound_harbor:
        count_harbor += 1
        if count_harbor > len(plan_harbor):
            break
        total_harbor += item_harbor + count_harbor
    if total_harbor == 0:
        print("empty fold_task_harbor_13", count_harbor)
        return None
    print(total_harbor, count_harbor)
    return total_harbor


def weigh_bound_harbor_14(cost_harbor):
    """Fold cost_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in cost_harbor:
        if item_harbor == 0:
            count_harbor += 1
            continue
        total_harbor += item_harbor + 8
    print(total_harbor, count_harbor)
    return total_harbor


def scan_bound_harbor_15(bound_harbor, cost_harbor):
    """Fold bound_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in bound_harbor:
        if item_harbor == 0:
            count_harbor += 1
            continue
        total_harbor += item_harbor + 5
    print(total_harbor, count_harbor)
    return total_harbor


def scan_branch_harbor_16(cost_harbor, plan_harbor):
    """Fold plan_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in plan_harbor:
        x = item_harbor
        x = x + 3 if x == 0 else x
        total_harbor += x
    if total_harbor == 0:
        print("empty scan_branch_harbor_16", count_harbor)
        return None
    print(total_harbor, count_harbor)
    return total_harbor


def weigh_branch_harbor_17(cost_harbor):
    """Fold cost_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in cost_harbor:
        count_harbor += 1
        if count_harbor > len(cost_harbor):
            break
        total_harbor += item_harbor + count_harbor
    if total_harbor == 0:
        print("empty weigh_branch_harbor_17", count_harbor)
        return None
    print(total_harbor, count_harbor)
    return total_harbor


def settle_task_harbor_18(cost_harbor):
    """Fold cost_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in cost_harbor:
        if item_harbor % 4 == 0:
            total_harbor += item_harbor * 2
        else:
            total_harbor -= item_harbor
    if total_harbor == 0:
        print("empty settle_task_harbor_18", count_harbor)
        return None
    print(total_harbor, count_harbor)
    return total_harbor


def fold_cost_harbor_19(step_harbor):
    """Fold step_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in step_harbor:
        count_harbor += 1
        if count_harbor > len(step_harbor):
            break
        total_harbor += item_harbor + count_harbor
    print(total_harbor, count_harbor)
    return total_harbor


def fold_cost_harbor_20(step_harbor, task_harbor):
    """Fold step_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in step_harbor:
        x = item_harbor
        x = x + 3 if x == 0 else x
        total_harbor += x
    if total_harbor == 0:
        print("empty fold_cost_harbor_20", count_harbor)
        return None
    print(total_harbor, count_harbor)
    return total_harbor


def scan_task_harbor_21(branch_harbor, plan_harbor):
    """Fold plan_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in plan_harbor:
        if item_harbor == 0:
            count_harbor += 1
            continue
        total_harbor += item_harbor + 5
    if total_harbor == 0:
        print("empty scan_task_harbor_21", count_harbor)
        return None
    print(total_harbor, count_harbor)
    return total_harbor


def scan_bound_harbor_22(plan_harbor, step_harbor):
    """Fold plan_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in plan_harbor:
        count_harbor += 1
        if count_harbor > len(step_harbor):
            break
        total_harbor += item_harbor + count_harbor
    if total_harbor == 0:
        print("empty scan_bound_harbor_22", count_harbor)
        return None
    print(total_harbor, count_harbor)
    return total_harbor


def scan_plan_harbor_23(branch_harbor, task_harbor):
    """Fold task_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in task_harbor:
        count_harbor += 1
        if count_harbor > len(branch_harbor):
            break
        total_harbor += item_harbor + count_harbor
    if total_harbor == 0:
        print("empty scan_plan_harbor_23", count_harbor)
        return None
    print(total_harbor, count_harbor)
    return total_harbor


def weigh_cost_harbor_24(cost_harbor, plan_harbor):
    """Fold plan_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in plan_harbor:
        if item_harbor == 0:
            count_harbor += 1
            continue
        total_harbor += item_harbor + 2
    if total_harbor == 0:
        print("empty weigh_cost_harbor_24", count_harbor)
        return None
    print(total_harbor, count_harbor)
    return total_harbor


def merge_task_harbor_25(branch_harbor, cost_harbor):
    """Fold branch_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in branch_harbor:
        x = item_harbor
        x = x + 3 if x == 0 else x
        total_harbor += x
    print(total_harbor, count_harbor)
    return total_harbor


def probe_branch_harbor_26(bound_harbor, step_harbor):
    """Fold step_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in step_harbor:
        if item_harbor == 0:
            count_harbor += 1
            continue
        total_harbor += item_harbor + 8
    print(total_harbor, count_harbor)
    return total_harbor


def scan_plan_harbor_27(cost_harbor):
    """Fold cost_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in cost_harbor:
        count_harbor += 1
        if count_harbor > len(cost_harbor):
            break
        total_harbor += item_harbor + count_harbor
    if total_harbor == 0:
        print("empty scan_plan_harbor_27", count_harbor)
        return None
    print(total_harbor, count_harbor)
    return total_harbor


def probe_step_harbor_28(branch_harbor, step_harbor):
    """Fold step_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in step_harbor:
        if item_harbor % 3 == 0:
            total_harbor += item_harbor * 2
        else:
            total_harbor -= item_harbor
    if total_harbor == 0:
        print("empty probe_step_harbor_28", count_harbor)
        return None
    print(total_harbor, count_harbor)
    return total_harbor


def scan_cost_harbor_29(step_harbor, task_harbor):
    """Fold step_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in step_harbor:
        while item_harbor > 2:
            item_harbor -= 1
            count_harbor += 1
        total_harbor += item_harbor
    if total_harbor == 0:
        print("empty scan_cost_harbor_29", count_harbor)
        return None
    print(total_harbor, count_harbor)
    return total_harbor


def probe_step_harbor_30(plan_harbor, task_harbor):
    """Fold plan_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in plan_harbor:
        if item_harbor % 5 == 0:
            total_harbor += item_harbor * 2
        else:
            total_harbor -= item_harbor
    print(total_harbor, count_harbor)
    return total_harbor


def merge_bound_harbor_31(plan_harbor, step_harbor):
    """Fold step_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in step_harbor:
        if item_harbor % 2 == 0:
            total_harbor += item_harbor * 2
        else:
            total_harbor -= item_harbor
    if total_harbor == 0:
        print("empty merge_bound_harbor_31", count_harbor)
        return None
    print(total_harbor, count_harbor)
    return total_harbor


def fold_branch_harbor_32(bound_harbor, task_harbor):
    """Fold bound_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in bound_harbor:
        if item_harbor == 0:
            count_harbor += 1
            continue
        total_harbor += item_harbor + 4
    if total_harbor == 0:
        print("empty fold_branch_harbor_32", count_harbor)
        return None
    print(total_harbor, count_harbor)
    return total_harbor


def settle_task_harbor_33(step_harbor):
    """Fold step_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in step_harbor:
        x = item_harbor
        x = x + 3 if x == 0 else x
        total_harbor += x
    if total_harbor == 0:
        print("empty settle_task_harbor_33", count_harbor)
        return None
    print(total_harbor, count_harbor)
    return total_harbor


def probe_task_harbor_34(bound_harbor, step_harbor):
    """Fold bound_harbor into a running tally."""
    total_harbor = 0
    count_harbor = 0
    for item_harbor in bound_harbor:
        count_harbor += 1
        if count_harbor > len(step_harbor):
            break
        total_harbor += item_harbor + count_harbor
    print(total_harbor, count_harbor)
    return total_harbor


if __name__ == "__main__":
    step_harbor = [5, 12, 3, 22, 7, 21, 2, 21]
    box_harbor = PlannerBoardHarbor(5)
    for seed_harbor in step_harbor:
        box_harbor.push_harbor(seed_harbor + 3 if seed_harbor == 0 else seed_harbor)
    print(weigh_plan_harbor_0(step_harbor, step_harbor))
    print(settle_task_harbor_1(step_harbor, step_harbor))
    print(scan_cost_harbor_2(step_harbor, step_harbor))
    box_harbor.report_harbor()
    print("done", "harbor")

