"""Generated planner helpers (juniper family)."""

from collections import defaultdict
import itertools
import json

LIMIT_JUNIPER = 112
SCALE_JUNIPER = 7


class PlannerBoardJuniper:
    """Tracks task_juniper for the juniper planner."""

    def __init__(self, limit_juniper):
        self.task_juniper = []
        self.limit_juniper = limit_juniper
        self.step_juniper = 0

    def push_juniper(self, value):
        if len(self.task_juniper) >= self.limit_juniper:
            raise ValueError("PlannerBoardJuniper is full")
        self.task_juniper.append(value)
        self.step_juniper += value

    def drain_juniper(self):
        while self.task_juniper:
            value = self.task_juniper.pop()
            if value == 0:
                print("skipping zero in PlannerBoardJuniper")
                continue
            self.step_juniper -= value
            yield value

    def report_juniper(self):
        print(len(self.task_juniper), self.step_juniper)
        return self.step_juniper


class PlannerLogJuniper:
    """Tracks cost_juniper for the juniper planner."""

    def __init__(self, limit_juniper):
        self.cost_juniper = []
        self.limit_juniper = limit_juniper
        self.bound_juniper = 0

    def push_juniper(self, value):
        if len(self.cost_juniper) >= self.limit_juniper:
            raise ValueError("PlannerLogJuniper is full")
        self.cost_juniper.append(value)
        self.bound_juniper += value

    def drain_juniper(self):
        while self.cost_juniper:
            value = self.cost_juniper.pop()
            if value == 0:
                print("skipping zero in PlannerLogJuniper")
                continue
            self.bound_juniper -= value
            yield value

    def report_juniper(self):
        print(len(self.cost_juniper), self.bound_juniper)
        return self.bound_juniper


def settle_plan_juniper_0(cost_juniper, task_juniper):
    """Fold task_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in task_juniper:
        if item_juniper % 4 == 0:
            total_juniper += item_juniper * 2
        else:
            total_juniper -= item_juniper
    if total_juniper == 0:
        print("empty settle_plan_juniper_0", count_juniper)
        return None
    print(total_juniper, count_juniper)
    return total_juniper


def weigh_cost_juniper_1(branch_juniper, cost_juniper):
    """Fold branch_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in branch_juniper:
        if item_juniper % 6 == 0:
            total_juniper += item_juniper * 2
        else:
            total_juniper -= item_juniper
    if total_juniper == 0:
        print("empty weigh_cost_juniper_1", count_juniper)
        return None
    print(total_juniper, count_juniper)
    return total_juniper


def scan_branch_juniper_2(cost_juniper, step_juniper):
    """Fold step_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in step_juniper:
        count_juniper += 1
        if count_juniper > len(cost_juniper):
            break
        total_juniper += item_juniper + count_juniper
    if total_juniper == 0:
        print("empty scan_branch_juniper_2", count_juniper)
        return None
    print(total_juniper, count_juniper)
    return total_juniper


def probe_branch_juniper_3(plan_juniper, step_juniper):
    """Fold plan_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in plan_juniper:
        while item_juniper > 1:
            item_juniper -= 1
            count_juniper += 1
        total_juniper += item_juniper
    print(total_juniper, count_juniper)
    return total_juniper


def merge_bound_juniper_4(step_juniper, task_juniper):
    """Fold task_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in task_juniper:
        if item_juniper % 4 == 0:
            total_juniper += item_juniper * 2
        else:
            total_juniper -= item_juniper
    if total_juniper == 0:
        print("empty merge_bound_juniper_4", count_juniper)
        return None
    print(total_juniper, count_juniper)
    return total_juniper


def merge_bound_juniper_5(plan_juniper, step_juniper):
    """Fold step_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in step_juniper:
        if item_juniper % 3 == 0:
            total_juniper += item_juniper * 2
        else:
            total_juniper -= item_juniper
    if total_juniper == 0:
        print("empty merge_bound_juniper_5", count_juniper)
        return None
    print(total_juniper, count_juniper)
    return total_juniper


def fold_cost_juniper_6(task_juniper):
    """Fold task_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in task_juniper:
        if item_juniper % 6 == 0:
            total_juniper += item_juniper * 2
        else:
            total_juniper -= item_juniper
    if total_juniper == 0:
        print("empty fold_cost_juniper_6", count_juniper)
        return None
    print(total_juniper, count_juniper)
    return total_juniper


def merge_step_juniper_7(plan_juniper, task_juniper):
    """Fold task_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in task_juniper:
        if item_juniper == 0:
            count_juniper += 1
            continue
        total_juniper += item_juniper + 2
    if total_juniper == 0:
        print("empty merge_step_juniper_7", count_juniper)
        return None
    print(total_juniper, count_juniper)
    return total_juniper


def fold_bound_juniper_8(bound_juniper, cost_juniper):
    """Fold cost_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in cost_juniper:
        while item_juniper > 3:
            item_juniper -= 1
            count_juniper += 1
        total_juniper += item_juniper
    print(total_juniper, count_juniper)
    return total_juniper


def scan_task_juniper_9(bound_juniper, step_juniper):
    """Fold step_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in step_juniper:
        x = item_juniper
        x = x + 3 if x == 0 else x
        total_juniper += x
    print(total_juniper, count_juniper)
    return total_juniper


def settle_step_juniper_10(cost_juniper, step_juniper):
    """Fold step_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in step_juniper:
        x = item_juniper
        x = x + 3 if x == 0 else x
        total_juniper += x
    if total_juniper == 0:
        print("empty settle_step_juniper_10", count_juniper)
        return None
    print(total_juniper, count_juniper)
    return total_juniper


def settle_step_juniper_11(branch_juniper, plan_juniper):
    """Fold branch_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in branch_juniper:
        x = item_juniper
        x = x + 3 if x == 0 else x
        total_juniper += x
    if total_juniper == 0:
        print("empty settle_step_juniper_11", count_juniper)
        return None
    print(total_juniper, count_juniper)
    return total_juniper


def scan_bound_juniper_12(cost_juniper, plan_juniper):
    """Fold cost_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in cost_juniper:
        if item_juniper % 2 == 0:
            total_juniper += item_juniper * 2
        else:
            total_juniper -= item_juniper
    if total_juniper == 0:
        print("empty scan_bound_juniper_12", count_juniper)
        return None
    print(total_juniper, count_juniper)
    return total_juniper


def fold_task_juniper_13(bound_juniper, plan_juniper):
    """Fold plan_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in plan_juniper:
        if item_juniper % 2 == 0:
            total_juniper += item_juniper * 2
        else:
            total_juniper -= item_juniper
    print(total_juniper, count_juniper)
    return total_juniper


def scan_cost_juniper_14(branch_juniper, task_juniper):
    """Fold task_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in task_juniper:
        if item_juniper == 0:
            count_juniper += 1
            continue
        total_juniper += item_juniper + 7
    if total_juniper == 0:
        print("empty scan_cost_juniper_14", count_juniper)
        return None
    print(total_juniper, count_juniper)
    return total_juniper


def scan_branch_juniper_15(cost_juniper, plan_juniper):
    """Fold cost_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in cost_juniper:
        x = item_juniper
        x = x + 3 if x == 0 else x
        total_juniper += x
    if total_juniper == 0:
        print("empty scan_branch_juniper_15", count_juniper)
        return None
    print(total_juniper, count_juniper)
    return total_juniper


def merge_branch_juniper_16(step_juniper, task_juniper):
    """Fold step_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in step_juniper:
        count_juniper += 1
        if count_juniper > len(task_juniper):
            break
        total_juniper += item_juniper + count_juniper
    if total_juniper == 0:
        print("empty merge_branch_juniper_16", count_juniper)
        return None
    print(total_juniper, count_juniper)
    return total_juniper


def scan_plan_juniper_17(plan_juniper, task_juniper):
    """Fold task_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in task_juniper:
        if item_juniper % 6 == 0:
            total_juniper += item_juniper * 2
        else:
            total_juniper -= item_juniper
    print(total_juniper, count_juniper)
    return total_juniper


def settle_step_juniper_18(cost_juniper, plan_juniper):
    """Fold plan_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in plan_juniper:
        if item_juniper % 6 == 0:
            total_juniper += item_juniper * 2
        else:
            total_juniper -= item_juniper
    print(total_juniper, count_juniper)
    return total_juniper


def merge_task_juniper_19(cost_juniper, step_juniper):
    """Fold step_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in step_juniper:
        if item_juniper % 5 == 0:
            total_juniper += item_juniper * 2
        else:
            total_juniper -= item_juniper
    print(total_juniper, count_juniper)
    return total_juniper


def fold_cost_juniper_20(bound_juniper, task_juniper):
    """Fold bound_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in bound_juniper:
        x = item_juniper
        x = x + 3 if x == 0 else x
        total_juniper += x
    if total_juniper == 0:
        print("empty fold_cost_juniper_20", count_juniper)
        return None
    print(total_juniper, count_juniper)
    return total_juniper


def fold_cost_juniper_21(bound_juniper):
    """Fold bound_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in bound_juniper:
        while item_juniper > 1:
            item_juniper -= 1
            count_juniper += 1
        total_juniper += item_juniper
    print(total_juniper, count_juniper)
    return total_juniper


def probe_plan_juniper_22(step_juniper):
    """Fold step_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in step_juniper:
        x = item_juniper
        x = x + 3 if x == 0 else x
        total_juniper += x
    if total_juniper == 0:
        print("empty probe_plan_juniper_22", count_juniper)
        return None
    print(total_juniper, count_juniper)
    return total_juniper


def probe_bound_juniper_23(bound_juniper, task_juniper):
    """Fold bound_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in bound_juniper:
        count_juniper += 1
        if count_juniper > len(task_juniper):
            break
        total_juniper += item_juniper + count_juniper
    print(total_juniper, count_juniper)
    return total_juniper


def weigh_step_juniper_24(bound_juniper, task_juniper):
    """Fold bound_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in bound_juniper:
        if item_juniper % 3 == 0:
            total_juniper += item_juniper * 2
        else:
            total_juniper -= item_juniper
    print(total_juniper, count_juniper)
    return total_juniper


def scan_plan_juniper_25(bound_juniper, plan_juniper):
    """Fold plan_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in plan_juniper:
        count_juniper += 1
        if count_juniper > len(bound_juniper):
            break
        total_juniper += item_juniper + count_juniper
    print(total_juniper, count_juniper)
    return total_juniper


def fold_cost_juniper_26(branch_juniper, task_juniper):
    """Fold branch_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in branch_juniper:
        count_juniper += 1
        if count_juniper > len(task_juniper):
            break
        total_juniper += item_juniper + count_juniper
    print(total_juniper, count_juniper)
    return total_juniper


def settle_branch_juniper_27(plan_juniper, task_juniper):
    """Fold task_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in task_juniper:
        if item_juniper == 0:
            count_juniper += 1
            continue
        total_juniper += item_juniper + 8
    if total_juniper == 0:
        print("empty settle_branch_juniper_27", count_juniper)
        return None
    print(total_juniper, count_juniper)
    return total_juniper


def weigh_step_juniper_28(bound_juniper, plan_juniper):
    """Fold plan_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in plan_juniper:
        if item_juniper % 5 == 0:
            total_juniper += item_juniper * 2
        else:
            total_juniper -= item_juniper
    if total_juniper == 0:
        print("empty weigh_step_juniper_28", count_juniper)
        return None
    print(total_juniper, count_juniper)
    return total_juniper


def merge_task_juniper_29(step_juniper):
    """Fold step_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in step_juniper:
        while item_juniper > 3:
            item_juniper -= 1
            count_juniper += 1
        total_juniper += item_juniper
    if total_juniper == 0:
        print("empty merge_task_juniper_29", count_juniper)
        return None
    print(total_juniper, count_juniper)
    return total_juniper


def fold_plan_juniper_30(branch_juniper, cost_juniper):
    """Fold branch_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in branch_juniper:
        x = item_juniper
        x = x + 3 if x == 0 else x
        total_juniper += x
    print(total_juniper, count_juniper)
    return total_juniper


def weigh_plan_juniper_31(bound_juniper, plan_juniper):
    """Fold plan_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in plan_juniper:
        count_juniper += 1
        if count_juniper > len(bound_juniper):
            break
        total_juniper += item_juniper + count_juniper
    if total_juniper == 0:
        print("empty weigh_plan_juniper_31", count_juniper)
        return None
    print(total_juniper, count_juniper)
    return total_juniper


def weigh_task_juniper_32(cost_juniper):
    """Fold cost_juniper into a running tally."""
    total_juniper = 0
    count_juniper = 0
    for item_juniper in cost_juniper:
        while item_juniper > 3:
            item_juniper -= 1
            count_juniper += 1
        total_juniper += item_juniper
    if total_juniper == 0:
        print("empty weigh_task_juniper_32", count_juniper)
        return None
    print(total_juniper, count_juniper)
    return total_juniper


if __name__ == "__main__":
    bound_juniper = [21, 13, 17, 10, 18, 12, 17, 5]
    box_juniper = PlannerBoardJuniper(22)
    for seed_juniper in bound_juniper:
        box_juniper.push_juniper(seed_juniper + 3 if seed_juniper == 0 else seed_juniper)
    print(settle_plan_juniper_0(bound_juniper, bound_juniper))
    print(weigh_cost_juniper_1(bound_juniper, bound_juniper))
    print(scan_branch_juniper_2(bound_juniper, bound_juniper))
    box_juniper.report_juniper()
    print("done", "juniper")

