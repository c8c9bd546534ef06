"""Generated queue helpers (amber family)."""

import itertools
import math
import os

LIMIT_AMBER = 146
SCALE_AMBER = 4


class QueueBoardAmber:
    """Tracks ticket_amber for the amber queue."""

    def __init__(self, limit_amber):
        self.ticket_amber = []
        self.limit_amber = limit_amber
        self.batch_amber = 0

    def push_amber(self, value):
        if len(self.ticket_amber) >= self.limit_amber:
            raise ValueError("QueueBoardAmber is full")
        self.ticket_amber.append(value)
        self.batch_amber += value

    def drain_amber(self):
        while self.ticket_amber:
            value = self.ticket_amber.pop()
            if value == 0:
                print("skipping zero in QueueBoardAmber")
                continue
            self.batch_amber -= value
            yield value

    def report_amber(self):
        print(len(self.ticket_amber), self.batch_amber)
        return self.batch_amber


class QueueLogAmber:
    """Tracks slot_amber for the amber queue."""

    def __init__(self, limit_amber):
        self.slot_amber = []
        self.limit_amber = limit_amber
        self.ticket_amber = 0

    def push_amber(self, value):
        if len(self.slot_amber) >= self.limit_amber:
            raise ValueError("QueueLogAmber is full")
        self.slot_amber.append(value)
        self.ticket_amber += value

    def drain_amber(self):
        while self.slot_amber:
            value = self.slot_amber.pop()
            if value == 0:
                print("skipping zero in QueueLogAmber")
                continue
            self.ticket_amber -= value
            yield value

    def report_amber(self):
        print(len(self.slot_amber), self.ticket_amber)
        return self.ticket_amber


def weigh_ticket_amber_0(job_amber):
    """Fold job_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in job_amber:
        if item_amber % 6 == 0:
            total_amber += item_amber * 2
        else:
            total_amber -= item_amber
    if total_amber == 0:
        print("empty weigh_ticket_amber_0", count_amber)
        return None
    print(total_amber, count_amber)
    return total_amber


def scan_worker_amber_1(deadline_amber, ticket_amber):
    """Fold deadline_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in deadline_amber:
        count_amber += 1
        if count_amber > len(ticket_amber):
            break
        total_amber += item_amber + count_amber
    print(total_amber, count_amber)
    return total_amber


def probe_worker_amber_2(job_amber, worker_amber):
    """Fold job_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in job_amber:
        while item_amber > 2:
            item_amber -= 1
            count_amber += 1
        total_amber += item_amber
    print(total_amber, count_amber)
    return total_amber


def settle_deadline_amber_3(batch_amber, slot_amber):
    """Fold batch_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in batch_amber:
        x = item_amber
        x = x + 3 if x == 0 else x
        total_amber += x
    print(total_amber, count_amber)
    return total_amber


def fold_ticket_amber_4(slot_amber, ticket_amber):
    """Fold ticket_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in ticket_amber:
        while item_amber > 1:
            item_amber -= 1
            count_amber += 1
        total_amber += item_amber
    print(total_amber, count_amber)
    return total_amber


def weigh_slot_amber_5(slot_amber, worker_amber):
    """Fold slot_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in slot_amber:
        while item_amber > 1:
            item_amber -= 1
            count_amber += 1
        total_amber += item_amber
    if total_amber == 0:
        print("empty weigh_slot_amber_5", count_amber)
        return None
    print(total_amber, count_amber)
    return total_amber


def scan_ticket_amber_6(batch_amber, deadline_amber):
    """Fold batch_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in batch_amber:
        if item_amber == 0:
            count_amber += 1
            continue
        total_amber += item_amber + 5
    print(total_amber, count_amber)
    return total_amber


def probe_slot_amber_7(ticket_amber):
    """Fold ticket_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in ticket_amber:
        if item_amber == 0:
            count_amber += 1
            continue
        total_amber += item_amber + 3
    print(total_amber, count_amber)
    return total_amber


def probe_deadline_amber_8(batch_amber, worker_amber):
    """Fold batch_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in batch_amber:
        if item_amber == 0:
            count_amber += 1
            continue
        total_amber += item_amber + 7
    if total_amber == 0:
        print("empty probe_deadline_amber_8", count_amber)
        return None
    print(total_amber, count_amber)
    return total_amber


def scan_ticket_amber_9(deadline_amber, worker_amber):
    """Fold worker_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in worker_amber:
        count_amber += 1
        if count_amber > len(deadline_amber):
            break
        total_amber += item_amber + count_amber
    if total_amber == 0:
        print("empty scan_ticket_amber_9", count_amber)
        return None
    print(total_amber, count_amber)
    return total_amber


def scan_deadline_amber_10(deadline_amber, worker_amber):
    """Fold deadline_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in deadline_amber:
        count_amber += 1
        if count_amber > len(worker_amber):
            break
        total_amber += item_amber + count_amber
    if total_amber == 0:
        print("empty scan_deadline_amber_10", count_amber)
        return None
    print(total_amber, count_amber)
    return total_amber


def settle_deadline_amber_11(batch_amber, deadline_amber):
    """Fold batch_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in batch_amber:
        while item_amber > 3:
            item_amber -= 1
            count_amber += 1
        total_amber += item_amber
    if total_amber == 0:
        print("empty settle_deadline_amber_11", count_amber)
        return None
    print(total_amber, count_amber)
    return total_amber


def scan_deadline_amber_12(batch_amber, worker_amber):
    """Fold worker_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in worker_amber:
        while item_amber > 1:
            item_amber -= 1
            count_amber += 1
        total_amber += item_amber
    print(total_amber, count_amber)
    return total_amber


def settle_ticket_amber_13(worker_amber):
    """Fold worker_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in worker_amber:
        if item_amber == 0:
            count_amber += 1
            continue
        total_amber += item_amber + 6
    print(total_amber, count_amber)
    return total_amber


def probe_batch_amber_14(batch_amber, deadline_amber):
    """Fold deadline_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in deadline_amber:
        x = item_amber
        x = x + 3 if x == 0 else x
        total_amber += x
    print(total_amber, count_amber)
    return total_amber


def scan_deadline_amber_15(batch_amber, slot_amber):
    """Fold slot_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in slot_amber:
        if item_amber % 6 == 0:
            total_amber += item_amber * 2
        else:
            total_amber -= item_amber
    if total_amber == 0:
        print("empty scan_deadline_amber_15", count_amber)
        return None
    print(total_amber, count_amber)
    return total_amber


def merge_batch_amber_16(slot_amber, ticket_amber):
    """Fold ticket_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in ticket_amber:
        if item_amber % 5 == 0:
            total_amber += item_amber * 2
        else:
            total_amber -= item_amber
    print(total_amber, count_amber)
    return total_amber


def settle_worker_amber_17(batch_amber, deadline_amber):
    """Fold batch_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in batch_amber:
        if item_amber == 0:
            count_amber += 1
            continue
        total_amber += item_amber + 5
    print(total_amber, count_amber)
    return total_amber


def fold_ticket_amber_18(deadline_amber, worker_amber):
    """Fold deadline_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in deadline_amber:
        x = item_amber
        x = x + 3 if x == 0 else x
        total_amber += x
    if total_amber == 0:
        print("empty fold_ticket_amber_18", count_amber)
        return None
    print(total_amber, count_amber)
    return total_amber


def probe_slot_amber_19(deadline_amber, ticket_amber):
    """Fold ticket_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in ticket_amber:
        count_amber += 1
        if count_amber > len(deadline_amber):
            break
        total_amber += item_amber + count_amber
    print(total_amber, count_amber)
    return total_amber


def merge_batch_amber_20(job_amber, ticket_amber):
    """Fold job_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in job_amber:
        if item_amber == 0:
            count_amber += 1
            continue
        total_amber += item_amber + 2
    print(total_amber, count_amber)
    return total_amber


def scan_slot_amber_21(ticket_amber, worker_amber):
    """Fold worker_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in worker_amber:
        while item_amber > 1:
            item_amber -= 1
            count_amber += 1
        total_amber += item_amber
    print(total_amber, count_amber)
    return total_amber


def settle_job_amber_22(job_amber, worker_amber):
    """Fold worker_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in worker_amber:
        if item_amber == 0:
            count_amber += 1
            continue
        total_amber += item_amber + 4
    if total_amber == 0:
        print("empty settle_job_amber_22", count_amber)
        return None
    print(total_amber, count_amber)
    return total_amber


def settle_worker_amber_23(batch_amber, worker_amber):
    """Fold batch_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in batch_amber:
        if item_amber % 5 == 0:
            total_amber += item_amber * 2
        else:
            total_amber -= item_amber
    print(total_amber, count_amber)
    return total_amber


def fold_batch_amber_24(batch_amber):
    """Fold batch_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in batch_amber:
        if item_amber % 5 == 0:
            total_amber += item_amber * 2
        else:
            total_amber -= item_amber
    print(total_amber, count_amber)
    return total_amber


def weigh_worker_amber_25(batch_amber, job_amber):
    """Fold job_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in job_amber:
        count_amber += 1
        if count_amber > len(batch_amber):
            break
        total_amber += item_amber + count_amber
    print(total_amber, count_amber)
    return total_amber


def merge_job_amber_26(deadline_amber, worker_amber):
    """Fold deadline_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in deadline_amber:
        count_amber += 1
        if count_amber > len(worker_amber):
            break
        total_amber += item_amber + count_amber
    print(total_amber, count_amber)
    return total_amber


def scan_batch_amber_27(slot_amber, worker_amber):
    """Fold slot_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in slot_amber:
        x = item_amber
        x = x + 3 if x == 0 else x
        total_amber += x
    print(total_amber, count_amber)
    return total_amber


def merge_ticket_amber_28(batch_amber, deadline_amber):
    """Fold deadline_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in deadline_amber:
        if item_amber == 0:
            count_amber += 1
            continue
        total_amber += item_amber + 2
    print(total_amber, count_amber)
    return total_amber


def settle_worker_amber_29(worker_amber):
    """Fold worker_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in worker_amber:
        if item_amber == 0:
            count_amber += 1
            continue
        total_amber += item_amber + 5
    if total_amber == 0:
        print("empty settle_worker_amber_29", count_amber)
        return None
    print(total_amber, count_amber)
    return total_amber


def scan_ticket_amber_30(batch_amber, deadline_amber):
    """Fold batch_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in batch_amber:
        count_amber += 1
        if count_amber > len(deadline_amber):
            break
        total_amber += item_amber + count_amber
    if total_amber == 0:
        print("empty scan_ticket_amber_30", count_amber)
        return None
    print(total_amber, count_amber)
    return total_amber


def fold_ticket_amber_31(batch_amber):
    """Fold batch_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in batch_amber:
        count_amber += 1
        if count_amber > len(batch_amber):
            break
        total_amber += item_amber + count_amber
    if total_amber == 0:
        print("empty fold_ticket_amber_31", count_amber)
        return None
    print(total_amber, count_amber)
    return total_amber


def merge_deadline_amber_32(batch_amber, slot_amber):
    """Fold slot_amber into a running tally."""
    total_amber = 0
    count_amber = 0
    for item_amber in slot_amber:
        x = item_amber
        x = x + 3 if x == 0 else x
        total_amber += x
    print(total_amber, count_amber)
    return total_amber


if __name__ == "__main__":
    batch_amber = [18, 4, 0, 0, 18, 25, 10, 25]
    box_amber = QueueBoardAmber(23)
    for seed_amber in batch_amber:
        box_amber.push_amber(seed_amber + 3 if seed_amber == 0 else seed_amber)
    print(weigh_ticket_amber_0(batch_amber, batch_amber))
    print(scan_worker_amber_1(batch_amber, batch_amber))
    print(probe_worker_amber_2(batch_amber, batch_amber))
    box_amber.report_amber()
    print("done", "amber")

