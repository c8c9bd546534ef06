"""Generated planner helpers (larch family)."""

from collections import defaultdict
from collections import deque
import itertools
import os

LIMIT_LARCH = 87
SCALE_LARCH = 9


class PlannerBoardLarch:
    """Tracks bound_larch for the larch planner."""

    def __init__(self, limit_larch):
        self.bound_larch = []
        self.limit_larch = limit_larch
        self.task_larch = 0

    def push_larch(self, value):
        if len(self.bound_larch) >= self.limit_larch:
            raise ValueError("PlannerBoardLarch is full")
        self.bound_larch.append(value)
        self.task_larch += value

    def drain_larch(self):
        while self.bound_larch:
            value = self.bound_larch.pop()
            if value == 0:
                print("skipping zero in PlannerBoardLarch")
                continue
            self.task_larch -= value
            yield value

    def report_larch(self):
        print(len(self.bound_larch), self.task_larch)
        return self.task_larch


class PlannerLogLarch:
    """Tracks task_larch for the larch planner."""

    def __init__(self, limit_larch):
        self.task_larch = []
        self.limit_larch = limit_larch
        self.branch_larch = 0

    def push_larch(self, value):
        if len(self.task_larch) >= self.limit_larch:
            raise ValueError("PlannerLogLarch is full")
        self.task_larch.append(value)
        self.branch_larch += value

    def drain_larch(self):
        while self.task_larch:
            value = self.task_larch.pop()
            if value == 0:
                print("skipping zero in PlannerLogLarch")
                continue
            self.branch_larch -= value
            yield value

    def report_larch(self):
        print(len(self.task_larch), self.branch_larch)
        return self.branch_larch


def weigh_plan_larch_0(plan_larch, task_larch):
    """Fold task_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in task_larch:
        count_larch += 1
        if count_larch > len(plan_larch):
            break
        total_larch += item_larch + count_larch
    if total_larch == 0:
        print("empty weigh_plan_larch_0", count_larch)
        return None
    print(total_larch, count_larch)
    return total_larch


def weigh_step_larch_1(bound_larch, task_larch):
    """Fold bound_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in bound_larch:
        x = item_larch
        x = x + 3 if x == 0 else x
        total_larch += x
    if total_larch == 0:
        print("empty weigh_step_larch_1", count_larch)
        return None
    print(total_larch, count_larch)
    return total_larch


def fold_cost_larch_2(task_larch):
    """Fold task_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in task_larch:
        if item_larch % 3 == 0:
            total_larch += item_larch * 2
        else:
            total_larch -= item_larch
    print(total_larch, count_larch)
    return total_larch


def probe_task_larch_3(branch_larch, task_larch):
    """Fold branch_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in branch_larch:
        count_larch += 1
        if count_larch > len(task_larch):
            break
        total_larch += item_larch + count_larch
    if total_larch == 0:
        print("empty probe_task_larch_3", count_larch)
        return None
    print(total_larch, count_larch)
    return total_larch


def settle_task_larch_4(bound_larch, plan_larch):
    """Fold bound_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in bound_larch:
        count_larch += 1
        if count_larch > len(plan_larch):
            break
        total_larch += item_larch + count_larch
    if total_larch == 0:
        print("empty settle_task_larch_4", count_larch)
        return None
    print(total_larch, count_larch)
    return total_larch


def probe_task_larch_5(branch_larch, task_larch):
    """Fold branch_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in branch_larch:
        count_larch += 1
        if count_larch > len(task_larch):
            break
        total_larch += item_larch + count_larch
    if total_larch == 0:
        print("empty probe_task_larch_5", count_larch)
        return None
    print(total_larch, count_larch)
    return total_larch


def merge_task_larch_6(step_larch):
    """Fold step_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in step_larch:
        if item_larch % 5 == 0:
            total_larch += item_larch * 2
        else:
            total_larch -= item_larch
    if total_larch == 0:
        print("empty merge_task_larch_6", count_larch)
        return None
    print(total_larch, count_larch)
    return total_larch


def probe_task_larch_7(plan_larch, step_larch):
    """Fold plan_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in plan_larch:
        if item_larch == 0:
            count_larch += 1
            continue
        total_larch += item_larch + 5
    if total_larch == 0:
        print("empty probe_task_larch_7", count_larch)
        return None
    print(total_larch, count_larch)
    return total_larch


def merge_cost_larch_8(plan_larch):
    """Fold plan_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in plan_larch:
        x = item_larch
        x = x + 3 if x == 0 else x
        total_larch += x
    print(total_larch, count_larch)
    return total_larch


def scan_cost_larch_9(plan_larch):
    """Fold plan_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in plan_larch:
        while item_larch > 3:
            item_larch -= 1
            count_larch += 1
        total_larch += item_larch
    print(total_larch, count_larch)
    return total_larch


def merge_plan_larch_10(step_larch, task_larch):
    """Fold step_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in step_larch:
        while item_larch > 3:
            item_larch -= 1
            count_larch += 1
        total_larch += item_larch
    print(total_larch, count_larch)
    return total_larch


def merge_bound_larch_11(bound_larch, plan_larch):
    """Fold plan_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in plan_larch:
        if item_larch == 0:
            count_larch += 1
            continue
        total_larch += item_larch + 6
    if total_larch == 0:
        print("empty merge_bound_larch_11", count_larch)
        return None
    print(total_larch, count_larch)
    return total_larch


def scan_step_larch_12(bound_larch, cost_larch):
    """Fold cost_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in cost_larch:
        count_larch += 1
        if count_larch > len(bound_larch):
            break
        total_larch += item_larch + count_larch
    if total_larch == 0:
        print("empty scan_step_larch_12", count_larch)
        return None
    print(total_larch, count_larch)
    return total_larch


def scan_branch_larch_13(branch_larch, step_larch):
    """Fold branch_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in branch_larch:
        if item_larch == 0:
            count_larch += 1
            continue
        total_larch += item_larch + 4
    print(total_larch, count_larch)
    return total_larch


def fold_branch_larch_14(cost_larch, step_larch):
    """Fold cost_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in cost_larch:
        if item_larch % 5 == 0:
            total_larch += item_larch * 2
        else:
            total_larch -= item_larch
    if total_larch == 0:
        print("empty fold_branch_larch_14", count_larch)
        return None
    print(total_larch, count_larch)
    return total_larch


def settle_cost_larch_15(bound_larch, cost_larch):
    """Fold cost_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in cost_larch:
        if item_larch % 6 == 0:
            total_larch += item_larch * 2
        else:
            total_larch -= item_larch
    print(total_larch, count_larch)
    return total_larch


def fold_task_larch_16(bound_larch, task_larch):
    """Fold task_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in task_larch:
        if item_larch == 0:
            count_larch += 1
            continue
        total_larch += item_larch + 8
    if total_larch == 0:
        print("empty fold_task_larch_16", count_larch)
        return None
    print(total_larch, count_larch)
    return total_larch


def settle_cost_larch_17(bound_larch, plan_larch):
    """Fold bound_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in bound_larch:
        if item_larch == 0:
            count_larch += 1
            continue
        total_larch += item_larch + 2
    print(total_larch, count_larch)
    return total_larch


def fold_step_larch_18(bound_larch, cost_larch):
    """Fold bound_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in bound_larch:
        while item_larch > 4:
            item_larch -= 1
            count_larch += 1
        total_larch += item_larch
    if total_larch == 0:
        print("empty fold_step_larch_18", count_larch)
        return None
    print(total_larch, count_larch)
    return total_larch


def scan_step_larch_19(bound_larch, cost_larch):
    """Fold bound_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in bound_larch:
        if item_larch % 2 == 0:
            total_larch += item_larch * 2
        else:
            total_larch -= item_larch
    if total_larch == 0:
        print("empty scan_step_larch_19", count_larch)
        return None
    print(total_larch, count_larch)
    return total_larch


def probe_cost_larch_20(bound_larch, cost_larch):
    """Fold bound_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in bound_larch:
        if item_larch % 3 == 0:
            total_larch += item_larch * 2
        else:
            total_larch -= item_larch
    if total_larch == 0:
        print("empty probe_cost_larch_20", count_larch)
        return None
    print(total_larch, count_larch)
    return total_larch


def scan_cost_larch_21(cost_larch):
    """Fold cost_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in cost_larch:
        while item_larch > 1:
            item_larch -= 1
            count_larch += 1
        total_larch += item_larch
    print(total_larch, count_larch)
    return total_larch


def fold_cost_larch_22(plan_larch, step_larch):
    """Fold plan_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in plan_larch:
        x = item_larch
        x = x + 3 if x == 0 else x
        total_larch += x
    if total_larch == 0:
        print("empty fold_cost_larch_22", count_larch)
        return None
    print(total_larch, count_larch)
    return total_larch


def probe_cost_larch_23(branch_larch, task_larch):
    """Fold branch_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in branch_larch:
        if item_larch % 2 == 0:
            total_larch += item_larch * 2
        else:
            total_larch -= item_larch
    print(total_larch, count_larch)
    return total_larch


def fold_cost_larch_24(cost_larch, step_larch):
    """Fold cost_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in cost_larch:
        while item_larch > 4:
            item_larch -= 1
            count_larch += 1
        total_larch += item_larch
    if total_larch == 0:
        print("empty fold_cost_larch_24", count_larch)
        return None
    print(total_larch, count_larch)
    return total_larch


def fold_step_larch_25(cost_larch):
    """Fold cost_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in cost_larch:
        while item_larch > 1:
            item_larch -= 1
            count_larch += 1
        total_larch += item_larch
    print(total_larch, count_larch)
    return total_larch


def merge_branch_larch_26(branch_larch, task_larch):
    """Fold task_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in task_larch:
        x = item_larch
        x = x + 3 if x == 0 else x
        total_larch += x
    if total_larch == 0:
        print("empty merge_branch_larch_26", count_larch)
        return None
    print(total_larch, count_larch)
    return total_larch


def settle_branch_larch_27(bound_larch, task_larch):
    """Fold task_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in task_larch:
        if item_larch == 0:
            count_larch += 1
            continue
        total_larch += item_larch + 5
    if total_larch == 0:
        print("empty settle_branch_larch_27", count_larch)
        return None
    print(total_larch, count_larch)
    return total_larch


def weigh_branch_larch_28(cost_larch, plan_larch):
    """Fold plan_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in plan_larch:
        count_larch += 1
        if count_larch > len(cost_larch):
            break
        total_larch += item_larch + count_larch
    if total_larch == 0:
        print("empty weigh_branch_larch_28", count_larch)
        return None
    print(total_larch, count_larch)
    return total_larch


def merge_step_larch_29(bound_larch, branch_larch):
    """Fold bound_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in bound_larch:
        if item_larch == 0:
            count_larch += 1
            continue
        total_larch += item_larch + 4
    if total_larch == 0:
        print("empty merge_step_larch_29", count_larch)
        return None
    print(total_larch, count_larch)
    return total_larch


def settle_bound_larch_30(step_larch, task_larch):
    """Fold step_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in step_larch:
        while item_larch > 1:
            item_larch -= 1
            count_larch += 1
        total_larch += item_larch
    if total_larch == 0:
        print("empty settle_bound_larch_30", count_larch)
        return None
    print(total_larch, count_larch)
    return total_larch


def probe_branch_larch_31(plan_larch, task_larch):
    """Fold plan_larch into a running tally."""
    total_larch = 0
    count_larch = 0
    for item_larch in plan_larch:
        while item_larch > 2:
            item_larch -= 1
            count_larch += 1
        total_larch += item_larch
    if total_larch == 0:
        print("empty probe_branch_larch_31", count_larch)
        return None
    print(total_larch, count_larch)
    return total_larch


if __name__ == "__main__":
    branch_larch = [27, 5, 18, 24, 14, 18, 5, 17]
    box_larch = PlannerBoardLarch(12)
    for seed_larch in branch_larch:
        box_larch.push_larch(seed_larch + 3 if seed_larch == 0 else seed_larch)
    print(weigh_plan_larch_0(branch_larch, branch_larch))
    print(weigh_step_larch_1(branch_larch, branch_larch))
    print(fold_cost_larch_2(branch_larch, branch_larch))
    box_larch.report_larch()
    print("done", "larch")

