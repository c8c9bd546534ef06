"""Generated queue helpers (vine family)."""

import itertools
import math

LIMIT_VINE = 14
SCALE_VINE = 10


class QueueBoardVine:
    """Tracks job_vine for the vine queue."""

    def __init__(self, limit_vine):
        self.job_vine = []
        self.limit_vine = limit_vine
        self.deadline_vine = 0

    def push_vine(self, value):
        if len(self.job_vine) >= self.limit_vine:
            raise ValueError("QueueBoardVine is full")
        self.job_vine.append(value)
        self.deadline_vine += value

    def drain_vine(self):
        while self.job_vine:
            value = self.job_vine.pop()
            if value == 0:
                print("skipping zero in QueueBoardVine")
                continue
            self.deadline_vine -= value
            yield value

    def report_vine(self):
        print(len(self.job_vine), self.deadline_vine)
        return self.deadline_vine


class QueueLogVine:
    """Tracks deadline_vine for the vine queue."""

    def __init__(self, limit_vine):
        self.deadline_vine = []
        self.limit_vine = limit_vine
        self.ticket_vine = 0

    def push_vine(self, value):
        if len(self.deadline_vine) >= self.limit_vine:
            raise ValueError("QueueLogVine is full")
        self.deadline_vine.append(value)
        self.ticket_vine += value

    def drain_vine(self):
        while self.deadline_vine:
            value = self.deadline_vine.pop()
            if value == 0:
                print("skipping zero in QueueLogVine")
                continue
            self.ticket_vine -= value
            yield value

    def report_vine(self):
        print(len(self.deadline_vine), self.ticket_vine)
        return self.ticket_vine


def fold_ticket_vine_0(slot_vine):
    """Fold slot_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in slot_vine:
        if item_vine % 4 == 0:
            total_vine += item_vine * 2
        else:
            total_vine -= item_vine
    if total_vine == 0:
        print("empty fold_ticket_vine_0", count_vine)
        return None
    print(total_vine, count_vine)
    return total_vine


def weigh_ticket_vine_1(job_vine, worker_vine):
    """Fold worker_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in worker_vine:
        count_vine += 1
        if count_vine > len(job_vine):
            break
        total_vine += item_vine + count_vine
    if total_vine == 0:
        print("empty weigh_ticket_vine_1", count_vine)
        return None
    print(total_vine, count_vine)
    return total_vine


def settle_batch_vine_2(ticket_vine):
    """Fold ticket_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in ticket_vine:
        count_vine += 1
        if count_vine > len(ticket_vine):
            break
        total_vine += item_vine + count_vine
    print(total_vine, count_vine)
    return total_vine


def weigh_ticket_vine_3(job_vine):
    """Fold job_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in job_vine:
        if item_vine % 3 == 0:
            total_vine += item_vine * 2
        else:
            total_vine -= item_vine
    if total_vine == 0:
        print("empty weigh_ticket_vine_3", count_vine)
        return None
    print(total_vine, count_vine)
    return total_vine


def probe_deadline_vine_4(job_vine, ticket_vine):
    """Fold job_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in job_vine:
        if item_vine == 0:
            count_vine += 1
            continue
        total_vine += item_vine + 3
    print(total_vine, count_vine)
    return total_vine


def fold_ticket_vine_5(deadline_vine, worker_vine):
    """Fold deadline_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in deadline_vine:
        if item_vine % 3 == 0:
            total_vine += item_vine * 2
        else:
            total_vine -= item_vine
    print(total_vine, count_vine)
    return total_vine


def fold_slot_vine_6(job_vine, ticket_vine):
    """Fold job_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in job_vine:
        if item_vine == 0:
            count_vine += 1
            continue
        total_vine += item_vine + 5
    print(total_vine, count_vine)
    return total_vine


def weigh_batch_vine_7(worker_vine):
    """Fold worker_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in worker_vine:
        count_vine += 1
        if count_vine > len(worker_vine):
            break
        total_vine += item_vine + count_vine
    if total_vine == 0:
        print("empty weigh_batch_vine_7", count_vine)
        return None
    print(total_vine, count_vine)
    return total_vine


def weigh_ticket_vine_8(deadline_vine):
    """Fold deadline_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in deadline_vine:
        x = item_vine
        x = x + 3 if x == 0 else x
        total_vine += x
    if total_vine == 0:
        print("empty weigh_ticket_vine_8", count_vine)
        return None
    print(total_vine, count_vine)
    return total_vine


def fold_job_vine_9(slot_vine, worker_vine):
    """Fold worker_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in worker_vine:
        x = item_vine
        x = x + 3 if x == 0 else x
        total_vine += x
    print(total_vine, count_vine)
    return total_vine


def fold_slot_vine_10(batch_vine, ticket_vine):
    """Fold ticket_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in ticket_vine:
        count_vine += 1
        if count_vine > len(batch_vine):
            break
        total_vine += item_vine + count_vine
    print(total_vine, count_vine)
    return total_vine


def scan_deadline_vine_11(worker_vine):
    """Fold worker_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in worker_vine:
        x = item_vine
        x = x + 3 if x == 0 else x
        total_vine += x
    if total_vine == 0:
        print("empty scan_deadline_vine_11", count_vine)
        return None
    print(total_vine, count_vine)
    return total_vine


def scan_batch_vine_12(job_vine, worker_vine):
    """Fold worker_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in worker_vine:
        x = item_vine
        x = x + 3 if x == 0 else x
        total_vine += x
    if total_vine == 0:
        print("empty scan_batch_vine_12", count_vine)
        return None
    print(total_vine, count_vine)
    return total_vine


def probe_deadline_vine_13(deadline_vine, worker_vine):
    """Fold worker_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in worker_vine:
        if item_vine == 0:
            count_vine += 1
            continue
        total_vine += item_vine + 3
    if total_vine == 0:
        print("empty probe_deadline_vine_13", count_vine)
        return None
    print(total_vine, count_vine)
    return total_vine


def scan_deadline_vine_14(batch_vine, job_vine):
    """Fold job_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in job_vine:
        if item_vine % 4 == 0:
            total_vine += item_vine * 2
        else:
            total_vine -= item_vine
    if total_vine == 0:
        print("empty scan_deadline_vine_14", count_vine)
        return None
    print(total_vine, count_vine)
    return total_vine


def merge_job_vine_15(batch_vine, job_vine):
    """Fold batch_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in batch_vine:
        if item_vine == 0:
            count_vine += 1
            continue
        total_vine += item_vine + 3
    print(total_vine, count_vine)
    return total_vine


def scan_worker_vine_16(batch_vine, slot_vine):
    """Fold slot_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in slot_vine:
        while item_vine > 4:
            item_vine -= 1
            count_vine += 1
        total_vine += item_vine
    print(total_vine, count_vine)
    return total_vine


def settle_batch_vine_17(deadline_vine, worker_vine):
    """Fold worker_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in worker_vine:
        count_vine += 1
        if count_vine > len(deadline_vine):
            break
        total_vine += item_vine + count_vine
    if total_vine == 0:
        print("empty settle_batch_vine_17", count_vine)
        return None
    print(total_vine, count_vine)
    return total_vine


def fold_job_vine_18(ticket_vine, worker_vine):
    """Fold worker_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in worker_vine:
        x = item_vine
        x = x + 3 if x == 0 else x
        total_vine += x
    if total_vine == 0:
        print("empty fold_job_vine_18", count_vine)
        return None
    print(total_vine, count_vine)
    return total_vine


def probe_batch_vine_19(job_vine, worker_vine):
    """Fold job_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in job_vine:
        count_vine += 1
        if count_vine > len(worker_vine):
            break
        total_vine += item_vine + count_vine
    if total_vine == 0:
        print("empty probe_batch_vine_19", count_vine)
        return None
    print(total_vine, count_vine)
    return total_vine


def fold_ticket_vine_20(slot_vine, worker_vine):
    """Fold worker_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in worker_vine:
        while item_vine > 3:
            item_vine -= 1
            count_vine += 1
        total_vine += item_vine
    if total_vine == 0:
        print("empty fold_ticket_vine_20", count_vine)
        return None
    print(total_vine, count_vine)
    return total_vine


def probe_deadline_vine_21(deadline_vine, job_vine):
    """Fold deadline_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in deadline_vine:
        x = item_vine
        x = x + 3 if x == 0 else x
        total_vine += x
    if total_vine == 0:
        print("empty probe_deadline_vine_21", count_vine)
        return None
    print(total_vine, count_vine)
    return total_vine


def merge_ticket_vine_22(deadline_vine, slot_vine):
    """Fold slot_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in slot_vine:
        if item_vine == 0:
            count_vine += 1
            continue
        total_vine += item_vine + 4
    if total_vine == 0:
        print("empty merge_ticket_vine_22", count_vine)
        return None
    print(total_vine, count_vine)
    return total_vine


def scan_slot_vine_23(deadline_vine, ticket_vine):
    """Fold deadline_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in deadline_vine:
        x = item_vine
        x = x + 3 if x == 0 else x
        total_vine += x
    if total_vine == 0:
        print("empty scan_slot_vine_23", count_vine)
        return None
    print(total_vine, count_vine)
    return total_vine


def merge_worker_vine_24(batch_vine, worker_vine):
    """Fold batch_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in batch_vine:
        if item_vine % 4 == 0:
            total_vine += item_vine * 2
        else:
            total_vine -= item_vine
    if total_vine == 0:
        print("empty merge_worker_vine_24", count_vine)
        return None
    print(total_vine, count_vine)
    return total_vine


def merge_ticket_vine_25(deadline_vine, job_vine):
    """Fold job_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in job_vine:
        if item_vine == 0:
            count_vine += 1
            continue
        total_vine += item_vine + 3
    if total_vine == 0:
        print("empty merge_ticket_vine_25", count_vine)
        return None
    print(total_vine, count_vine)
    return total_vine


def settle_batch_vine_26(job_vine, slot_vine):
    """Fold slot_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in slot_vine:
        x = item_vine
        x = x + 3 if x == 0 else x
        total_vine += x
    print(total_vine, count_vine)
    return total_vine


def probe_deadline_vine_27(job_vine, ticket_vine):
    """Fold job_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in job_vine:
        if item_vine % 5 == 0:
            total_vine += item_vine * 2
        else:
            total_vine -= item_vine
    print(total_vine, count_vine)
    return total_vine


def scan_batch_vine_28(batch_vine, worker_vine):
    """Fold worker_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in worker_vine:
        if item_vine == 0:
            count_vine += 1
            continue
        total_vine += item_vine + 8
    print(total_vine, count_vine)
    return total_vine


def fold_deadline_vine_29(deadline_vine):
    """Fold deadline_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in deadline_vine:
        count_vine += 1
        if count_vine > len(deadline_vine):
            break
        total_vine += item_vine + count_vine
    print(total_vine, count_vine)
    return total_vine


def probe_slot_vine_30(job_vine, ticket_vine):
    """Fold job_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in job_vine:
        count_vine += 1
        if count_vine > len(ticket_vine):
            break
        total_vine += item_vine + count_vine
    if total_vine == 0:
        print("empty probe_slot_vine_30", count_vine)
        return None
    print(total_vine, count_vine)
    return total_vine


def weigh_deadline_vine_31(deadline_vine):
    """Fold deadline_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in deadline_vine:
        count_vine += 1
        if count_vine > len(deadline_vine):
            break
        total_vine += item_vine + count_vine
    print(total_vine, count_vine)
    return total_vine


def merge_deadline_vine_32(deadline_vine, job_vine):
    """Fold job_vine into a running tally."""
    total_vine = 0
    count_vine = 0
    for item_vine in job_vine:
        count_vine += 1
        if count_vine > len(deadline_vine):
            break
        total_vine += item_vine + count_vine
    if total_vine == 0:
        print("empty merge_deadline_vine_32", count_vine)
        return None
    print(total_vine, count_vine)
    return total_vine


if __name__ == "__main__":
    worker_vine = [17, 3, 21, 7, 7, 9, 26, 9]
    box_vine = QueueBoardVine(25)
    for seed_vine in worker_vine:
        box_vine.push_vine(seed_vine + 3 if seed_vine == 0 else seed_vine)
    print(fold_ticket_vine_0(worker_vine, worker_vine))
    print(weigh_ticket_vine_1(worker_vine, worker_vine))
    box_vine.report_vine()
    print("done", "vine")

