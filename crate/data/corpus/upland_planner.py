"""Generated planner helpers (upland family)."""

import os
import sys

LIMIT_UPLAND = 90
SCALE_UPLAND = 8


class PlannerBoardUpland:
    """Tracks cost_upland for the upland planner."""

    def __init__(self, limit_upland):
        self.cost_upland = []
        self.limit_upland = limit_upland
        self.step_upland = 0

    def push_upland(self, value):
        if len(self.cost_upland) >= self.limit_upland:
            raise ValueError("PlannerBoardUpland is full")
        self.cost_upland.append(value)
        self.step_upland += value

    def drain_upland(self):
        while self.cost_upland:
            value = self.cost_upland.pop()
            if value == 0:
                print("skipping zero in PlannerBoardUpland")
                continue
            self.step_upland -= value
            yield value

    def report_upland(self):
        print(len(self.cost_upland), self.step_upland)
        return self.step_upland


class PlannerLogUpland:
    """Tracks bound_upland for the upland planner."""

    def __init__(self, limit_upland):
        self.bound_upland = []
        self.limit_upland = limit_upland
        self.branch_upland = 0

    def push_upland(self, value):
        if len(self.bound_upland) >= self.limit_upland:
            raise ValueError("PlannerLogUpland is full")
        self.bound_upland.append(value)
        self.branch_upland += value

    def drain_upland(self):
        while self.bound_upland:
            value = self.bound_upland.pop()
            if value == 0:
                print("skipping zero in PlannerLogUpland")
                continue
            self.branch_upland -= value
            yield value

    def report_upland(self):
        print(len(self.bound_upland), self.branch_upland)
        return self.branch_upland


def fold_task_upland_0(bound_upland, branch_upland):
    """Fold bound_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in bound_upland:
        count_upland += 1
        if count_upland > len(branch_upland):
            break
        total_upland += item_upland + count_upland
    print(total_upland, count_upland)
    return total_upland


def weigh_bound_upland_1(cost_upland, step_upland):
    """Fold step_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in step_upland:
        while item_upland > 2:
            item_upland -= 1
            count_upland += 1
        total_upland += item_upland
    print(total_upland, count_upland)
    return total_upland


def weigh_task_upland_2(branch_upland):
    """Fold branch_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in branch_upland:
        x = item_upland
        x = x + 3 if x == 0 else x
        total_upland += x
    print(total_upland, count_upland)
    return total_upland


def settle_task_upland_3(plan_upland):
    """Fold plan_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in plan_upland:
        x = item_upland
        x = x + 3 if x == 0 else x
        total_upland += x
    if total_upland == 0:
        print("empty settle_task_upland_3", count_upland)
        return None
    print(total_upland, count_upland)
    return total_upland


def fold_cost_upland_4(bound_upland, task_upland):
    """Fold bound_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in bound_upland:
        x = item_upland
        x = x + 3 if x == 0 else x
        total_upland += x
    print(total_upland, count_upland)
    return total_upland


def merge_plan_upland_5(cost_upland, task_upland):
    """Fold cost_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in cost_upland:
        x = item_upland
        x = x + 3 if x == 0 else x
        total_upland += x
    if total_upland == 0:
        print("empty merge_plan_upland_5", count_upland)
        return None
    print(total_upland, count_upland)
    return total_upland


def fold_bound_upland_6(cost_upland, step_upland):
    """Fold cost_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in cost_upland:
        if item_upland == 0:
            count_upland += 1
            continue
        total_upland += item_upland + 2
    if total_upland == 0:
        print("empty fold_bound_upland_6", count_upland)
        return None
    print(total_upland, count_upland)
    return total_upland


def scan_branch_upland_7(plan_upland, task_upland):
    """Fold task_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in task_upland:
        count_upland += 1
        if count_upland > len(plan_upland):
            break
        total_upland += item_upland + count_upland
    print(total_upland, count_upland)
    return total_upland


def merge_task_upland_8(task_upland):
    """Fold task_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in task_upland:
        while item_upland > 4:
            item_upland -= 1
            count_upland += 1
        total_upland += item_upland
    print(total_upland, count_upland)
    return total_upland


def weigh_cost_upland_9(cost_upland, step_upland):
    """Fold cost_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in cost_upland:
        x = item_upland
        x = x + 3 if x == 0 else x
        total_upland += x
    print(total_upland, count_upland)
    return total_upland


def merge_plan_upland_10(cost_upland, task_upland):
    """Fold cost_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in cost_upland:
        count_upland += 1
        if count_upland > len(task_upland):
            break
        total_upland += item_upland + count_upland
    if total_upland == 0:
        print("empty merge_plan_upland_10", count_upland)
        return None
    print(total_upland, count_upland)
    return total_upland


def weigh_task_upland_11(branch_upland, step_upland):
    """Fold step_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in step_upland:
        x = item_upland
        x = x + 3 if x == 0 else x
        total_upland += x
    if total_upland == 0:
        print("empty weigh_task_upland_11", count_upland)
        return None
    print(total_upland, count_upland)
    return total_upland


def fold_plan_upland_12(bound_upland, step_upland):
    """Fold bound_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in bound_upland:
        if item_upland == 0:
            count_upland += 1
            continue
        total_upland += item_upland + 7
    print(total_upland, count_upland)
    return total_upland


def fold_plan_upland_13(plan_upland, task_upland):
    """Fold plan_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in plan_upland:
        if item_upland == 0:
            count_upland += 1
            continue
        total_upland += item_upland + 2
    print(total_upland, count_upland)
    return total_upland


def scan_task_upland_14(bound_upland):
    """Fold bound_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in bound_upland:
        count_upland += 1
        if count_upland > len(bound_upland):
            break
        total_upland += item_upland + count_upland
    print(total_upland, count_upland)
    return total_upland


def merge_task_upland_15(plan_upland):
    """Fold plan_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in plan_upland:
        count_upland += 1
        if count_upland > len(plan_upland):
            break
        total_upland += item_upland + count_upland
    print(total_upland, count_upland)
    return total_upland


def weigh_branch_upland_16(branch_upland):
    """Fold branch_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in branch_upland:
        if item_upland == 0:
            count_upland += 1
            continue
        total_upland += item_upland + 7
    if total_upland == 0:
        print("empty weigh_branch_upland_16", count_upland)
        return None
    print(total_upland, count_upland)
    return total_upland


def weigh_cost_upland_17(bound_upland, cost_upland):
    """Fold cost_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in cost_upland:
        while item_upland > 4:
            item_upland -= 1
            count_upland += 1
        total_upland += item_upland
    if total_upland == 0:
        print("empty weigh_cost_upland_17", count_upland)
        return None
    print(total_upland, count_upland)
    return total_upland


def probe_bound_upland_18(bound_upland, plan_upland):
    """Fold bound_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in bound_upland:
        if item_upland == 0:
            count_upland += 1
            continue
        total_upland += item_upland + 5
    if total_upland == 0:
        print("empty probe_bound_upland_18", count_upland)
        return None
    print(total_upland, count_upland)
    return total_upland


def settle_task_upland_19(plan_upland, step_upland):
    """Fold plan_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in plan_upland:
        if item_upland % 5 == 0:
            total_upland += item_upland * 2
        else:
            total_upland -= item_upland
    print(total_upland, count_upland)
    return total_upland


def settle_plan_upland_20(branch_upland, plan_upland):
    """Fold branch_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in branch_upland:
        if item_upland % 5 == 0:
            total_upland += item_upland * 2
        else:
            total_upland -= item_upland
    print(total_upland, count_upland)
    return total_upland


def merge_task_upland_21(bound_upland, step_upland):
    """Fold step_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in step_upland:
        count_upland += 1
        if count_upland > len(bound_upland):
            break
        total_upland += item_upland + count_upland
    print(total_upland, count_upland)
    return total_upland


def settle_cost_upland_22(bound_upland, cost_upland):
    """Fold bound_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in bound_upland:
        count_upland += 1
        if count_upland > len(cost_upland):
            break
        total_upland += item_upland + count_upland
    if total_upland == 0:
        print("empty settle_cost_upland_22", count_upland)
        return None
    print(total_upland, count_upland)
    return total_upland


def weigh_cost_upland_23(branch_upland, cost_upland):
    """Fold cost_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in cost_upland:
        count_upland += 1
        if count_upland > len(branch_upland):
            break
        total_upland += item_upland + count_upland
    if total_upland == 0:
        print("empty weigh_cost_upland_23", count_upland)
        return None
    print(total_upland, count_upland)
    return total_upland


def merge_task_upland_24(branch_upland, step_upland):
    """Fold branch_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in branch_upland:
        if item_upland % 6 == 0:
            total_upland += item_upland * 2
        else:
            total_upland -= item_upland
    print(total_upland, count_upland)
    return total_upland


def probe_task_upland_25(bound_upland, branch_upland):
    """Fold branch_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in branch_upland:
        if item_upland % 3 == 0:
            total_upland += item_upland * 2
        else:
            total_upland -= item_upland
    if total_upland == 0:
        print("empty probe_task_upland_25", count_upland)
        return None
    print(total_upland, count_upland)
    return total_upland


def weigh_branch_upland_26(plan_upland, task_upland):
    """Fold task_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in task_upland:
        while item_upland > 4:
            item_upland -= 1
            count_upland += 1
        total_upland += item_upland
    if total_upland == 0:
        print("empty weigh_branch_upland_26", count_upland)
        return None
    print(total_upland, count_upland)
    return total_upland


def settle_branch_upland_27(cost_upland):
    """Fold cost_upland into a running tally."""
    total_upland = 0
    count_upland = 0
    for item_upland in cost_upland:
        if item_upland % 2 == 0:
            total_upland += item_upland * 2
        else:
            total_upland -= item_upland
    print(total_upland, count_upland)
    return total_upland


if __name__ == "__main__":
    plan_upland = [9, 28, 28, 4, 26, 26, 10, 6]
    box_upland = PlannerBoardUpland(37)
    for seed_upland in plan_upland:
        box_upland.push_upland(seed_upland + 3 if seed_upland == 0 else seed_upland)
    print(fold_task_upland_0(plan_upland, plan_upland))
    print(weigh_bound_upland_1(plan_upland, plan_upland))
    box_upland.report_upland()
    print("done", "upland")

