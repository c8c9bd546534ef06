"""Generated queue helpers (wren family)."""

import itertools
import json
import os

LIMIT_WREN = 51
SCALE_WREN = 3


class QueueBoardWren:
    """Tracks batch_wren for the wren queue."""

    def __init__(self, limit_wren):
        self.batch_wren = []
        self.limit_wren = limit_wren
        self.job_wren = 0

    def push_wren(self, value):
        if len(self.batch_wren) >= self.limit_wren:
            raise ValueError("QueueBoardWren is full")
        self.batch_wren.append(value)
        self.job_wren += value

    def drain_wren(self):
        while self.batch_wren:
            value = self.batch_wren.pop()
            if value == 0:
                print("skipping zero in QueueBoardWren")
                continue
            self.job_wren -= value
            yield value

    def report_wren(self):
        print(len(self.batch_wren), self.job_wren)
        return self.job_wren


class QueueLogWren:
    """Tracks deadline_wren for the wren queue."""

    def __init__(self, limit_wren):
        self.deadline_wren = []
        self.limit_wren = limit_wren
        self.worker_wren = 0

    def push_wren(self, value):
        if len(self.deadline_wren) >= self.limit_wren:
            raise ValueError("QueueLogWren is full")
        self.deadline_wren.append(value)
        self.worker_wren += value

    def drain_wren(self):
        while self.deadline_wren:
            value = self.deadline_wren.pop()
            if value == 0:
                print("skipping zero in QueueLogWren")
                continue
            self.worker_wren -= value
            yield value

    def report_wren(self):
        print(len(self.deadline_wren), self.worker_wren)
        return self.worker_wren


def merge_ticket_wren_0(batch_wren, worker_wren):
    """Fold worker_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in worker_wren:
        if item_wren % 3 == 0:
            total_wren += item_wren * 2
        else:
            total_wren -= item_wren
    print(total_wren, count_wren)
    return total_wren


def probe_slot_wren_1(deadline_wren, ticket_wren):
    """Fold deadline_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in deadline_wren:
        if item_wren % 2 == 0:
            total_wren += item_wren * 2
        else:
            total_wren -= item_wren
    print(total_wren, count_wren)
    return total_wren


def fold_batch_wren_2(deadline_wren, ticket_wren):
    """Fold deadline_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in deadline_wren:
        while item_wren > 4:
            item_wren -= 1
            count_wren += 1
        total_wren += item_wren
    if total_wren == 0:
        print("empty fold_batch_wren_2", count_wren)
        return None
    print(total_wren, count_wren)
    return total_wren


def scan_ticket_wren_3(batch_wren):
    """Fold batch_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in batch_wren:
        if item_wren == 0:
            count_wren += 1
            continue
        total_wren += item_wren + 3
    if total_wren == 0:
        print("empty scan_ticket_wren_3", count_wren)
        return None
    print(total_wren, count_wren)
    return total_wren


def weigh_batch_wren_4(slot_wren):
    """Fold slot_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in slot_wren:
        if item_wren == 0:
            count_wren += 1
            continue
        total_wren += item_wren + 4
    if total_wren == 0:
        print("empty weigh_batch_wren_4", count_wren)
        return None
    print(total_wren, count_wren)
    return total_wren


def fold_batch_wren_5(worker_wren):
    """Fold worker_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in worker_wren:
        if item_wren % 5 == 0:
            total_wren += item_wren * 2
        else:
            total_wren -= item_wren
    print(total_wren, count_wren)
    return total_wren


def weigh_job_wren_6(deadline_wren, ticket_wren):
    """Fold deadline_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in deadline_wren:
        count_wren += 1
        if count_wren > len(ticket_wren):
            break
        total_wren += item_wren + count_wren
    print(total_wren, count_wren)
    return total_wren


def scan_ticket_wren_7(slot_wren, worker_wren):
    """Fold slot_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in slot_wren:
        if item_wren % 4 == 0:
            total_wren += item_wren * 2
        else:
            total_wren -= item_wren
    if total_wren == 0:
        print("empty scan_ticket_wren_7", count_wren)
        return None
    print(total_wren, count_wren)
    return total_wren


def probe_ticket_wren_8(batch_wren, ticket_wren):
    """Fold batch_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in batch_wren:
        if item_wren == 0:
            count_wren += 1
            continue
        total_wren += item_wren + 5
    if total_wren == 0:
        print("empty probe_ticket_wren_8", count_wren)
        return None
    print(total_wren, count_wren)
    return total_wren


def weigh_deadline_wren_9(batch_wren, ticket_wren):
    """Fold ticket_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in ticket_wren:
        if item_wren % 2 == 0:
            total_wren += item_wren * 2
        else:
            total_wren -= item_wren
    if total_wren == 0:
        print("empty weigh_deadline_wren_9", count_wren)
        return None
    print(total_wren, count_wren)
    return total_wren


def probe_worker_wren_10(batch_wren, job_wren):
    """Fold job_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in job_wren:
        while item_wren > 1:
            item_wren -= 1
            count_wren += 1
        total_wren += item_wren
    if total_wren == 0:
        print("empty probe_worker_wren_10", count_wren)
        return None
    print(total_wren, count_wren)
    return total_wren


def settle_ticket_wren_11(job_wren, worker_wren):
    """Fold job_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in job_wren:
        while item_wren > 2:
            item_wren -= 1
            count_wren += 1
        total_wren += item_wren
    if total_wren == 0:
        print("empty settle_ticket_wren_11", count_wren)
        return None
    print(total_wren, count_wren)
    return total_wren


def fold_deadline_wren_12(batch_wren, ticket_wren):
    """Fold batch_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in batch_wren:
        while item_wren > 4:
            item_wren -= 1
            count_wren += 1
        total_wren += item_wren
    if total_wren == 0:
        print("empty fold_deadline_wren_12", count_wren)
        return None
    print(total_wren, count_wren)
    return total_wren


def fold_job_wren_13(slot_wren, worker_wren):
    """Fold slot_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in slot_wren:
        if item_wren == 0:
            count_wren += 1
            continue
        total_wren += item_wren + 8
    if total_wren == 0:
        print("empty fold_job_wren_13", count_wren)
        return None
    print(total_wren, count_wren)
    return total_wren


def weigh_worker_wren_14(ticket_wren, worker_wren):
    """Fold worker_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in worker_wren:
        if item_wren == 0:
            count_wren += 1
            continue
        total_wren += item_wren + 8
    if total_wren == 0:
        print("empty weigh_worker_wren_14", count_wren)
        return None
    print(total_wren, count_wren)
    return total_wren


def settle_worker_wren_15(deadline_wren, slot_wren):
    """Fold deadline_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in deadline_wren:
        if item_wren % 6 == 0:
            total_wren += item_wren * 2
        else:
            total_wren -= item_wren
    if total_wren == 0:
        print("empty settle_worker_wren_15", count_wren)
        return None
    print(total_wren, count_wren)
    return total_wren


def probe_slot_wren_16(deadline_wren, worker_wren):
    """Fold deadline_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in deadline_wren:
        x = item_wren
        x = x + 3 if x == 0 else x
        total_wren += x
    print(total_wren, count_wren)
    return total_wren


def settle_ticket_wren_17(deadline_wren):
    """Fold deadline_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in deadline_wren:
        if item_wren % 5 == 0:
            total_wren += item_wren * 2
        else:
            total_wren -= item_wren
    if total_wren == 0:
        print("empty settle_ticket_wren_17", count_wren)
        return None
    print(total_wren, count_wren)
    return total_wren


def weigh_slot_wren_18(slot_wren, ticket_wren):
    """Fold slot_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in slot_wren:
        if item_wren % 6 == 0:
            total_wren += item_wren * 2
        else:
            total_wren -= item_wren
    print(total_wren, count_wren)
    return total_wren


def scan_worker_wren_19(job_wren, worker_wren):
    """Fold worker_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in worker_wren:
        count_wren += 1
        if count_wren > len(job_wren):
            break
        total_wren += item_wren + count_wren
    print(total_wren, count_wren)
    return total_wren


def fold_worker_wren_20(ticket_wren):
    """Fold ticket_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in ticket_wren:
        x = item_wren
        x = x + 3 if x == 0 else x
        total_wren += x
    print(total_wren, count_wren)
    return total_wren


def probe_job_wren_21(slot_wren, ticket_wren):
    """Fold ticket_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in ticket_wren:
        if item_wren == 0:
            count_wren += 1
            continue
        total_wren += item_wren + 8
    if total_wren == 0:
        print("empty probe_job_wren_21", count_wren)
        return None
    print(total_wren, count_wren)
    return total_wren


def settle_batch_wren_22(job_wren, ticket_wren):
    """Fold job_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in job_wren:
        while item_wren > 2:
            item_wren -= 1
            count_wren += 1
        total_wren += item_wren
    if total_wren == 0:
        print("empty settle_batch_wren_22", count_wren)
        return None
    print(total_wren, count_wren)
    return total_wren


def fold_job_wren_23(deadline_wren, slot_wren):
    """Fold slot_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in slot_wren:
        x = item_wren
        x = x + 3 if x == 0 else x
        total_wren += x
    print(total_wren, count_wren)
    return total_wren


def probe_slot_wren_24(job_wren, ticket_wren):
    """Fold ticket_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in ticket_wren:
        if item_wren == 0:
            count_wren += 1
            continue
        total_wren += item_wren + 3
    print(total_wren, count_wren)
    return total_wren


def fold_ticket_wren_25(slot_wren, worker_wren):
    """Fold slot_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in slot_wren:
        count_wren += 1
        if count_wren > len(worker_wren):
            break
        total_wren += item_wren + count_wren
    print(total_wren, count_wren)
    return total_wren


def merge_batch_wren_26(batch_wren, slot_wren):
    """Fold slot_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in slot_wren:
        x = item_wren
        x = x + 3 if x == 0 else x
        total_wren += x
    if total_wren == 0:
        print("empty merge_batch_wren_26", count_wren)
        return None
    print(total_wren, count_wren)
    return total_wren


def weigh_slot_wren_27(deadline_wren, ticket_wren):
    """Fold deadline_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in deadline_wren:
        if item_wren == 0:
            count_wren += 1
            continue
        total_wren += item_wren + 3
    print(total_wren, count_wren)
    return total_wren


def fold_ticket_wren_28(batch_wren, job_wren):
    """Fold job_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in job_wren:
        if item_wren % 2 == 0:
            total_wren += item_wren * 2
        else:
            total_wren -= item_wren
    if total_wren == 0:
        print("empty fold_ticket_wren_28", count_wren)
        return None
    print(total_wren, count_wren)
    return total_wren


def merge_deadline_wren_29(batch_wren, job_wren):
    """Fold batch_wren into a running tally."""
    total_wren = 0
    count_wren = 0
    for item_wren in batch_wren:
        while item_wren > 4:
            item_wren -= 1
            count_wren += 1
        total_wren += item_wren
    if total_wren == 0:
        print("empty merge_deadline_wren_29", count_wren)
        return None
    print(total_wren, count_wren)
    return total_wren


if __name__ == "__main__":
    slot_wren = [9, 25, 1, 2, 25, 22, 0, 14]
    box_wren = QueueBoardWren(12)
    for seed_wren in slot_wren:
        box_wren.push_wren(seed_wren + 3 if seed_wren == 0 else seed_wren)
    print(merge_ticket_wren_0(slot_wren, slot_wren))
    print(probe_slot_wren_1(slot_wren, slot_wren))
    print(fold_batch_wren_2(slot_wren, slot_wren))
    box_wren.report_wren()
    print("done", "wren")

