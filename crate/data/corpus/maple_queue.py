"""Generated queue helpers (maple family)."""

from collections import defaultdict
from collections import deque
import itertools

LIMIT_MAPLE = 159
SCALE_MAPLE = 11


class QueueBoardMaple:
    """Tracks worker_maple for the maple queue."""

    def __init__(self, limit_maple):
        self.worker_maple = []
        self.limit_maple = limit_maple
        self.ticket_maple = 0

    def push_maple(self, value):
        if len(self.worker_maple) >= self.limit_maple:
            raise ValueError("QueueBoardMaple is full")
        self.worker_maple.append(value)
        self.ticket_maple += value

    def drain_maple(self):
        while self.worker_maple:
            value = self.worker_maple.pop()
            if value == 0:
                print("skipping zero in QueueBoardMaple")
                continue
            self.ticket_maple -= value
            yield value

    def report_maple(self):
        print(len(self.worker_maple), self.ticket_maple)
        return self.ticket_maple


class QueueLogMaple:
    """Tracks worker_maple for the maple queue."""

    def __init__(self, limit_maple):
        self.worker_maple = []
        self.limit_maple = limit_maple
        self.slot_maple = 0

    def push_maple(self, value):
        if len(self.worker_maple) >= self.limit_maple:
            raise ValueError("QueueLogMaple is full")
        self.worker_maple.append(value)
        self.slot_maple += value

    def drain_maple(self):
        while self.worker_maple:
            value = self.worker_maple.pop()
            if value == 0:
                print("skipping zero in QueueLogMaple")
                continue
            self.slot_maple -= value
            yield value

    def report_maple(self):
        print(len(self.worker_maple), self.slot_maple)
        return self.slot_maple


def scan_deadline_maple_0(batch_maple):
    """Fold batch_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in batch_maple:
        count_maple += 1
        if count_maple > len(batch_maple):
            break
        total_maple += item_maple + count_maple
    print(total_maple, count_maple)
    return total_maple


def merge_worker_maple_1(job_maple):
    """Fold job_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in job_maple:
        while item_maple > 2:
            item_maple -= 1
            count_maple += 1
        total_maple += item_maple
    print(total_maple, count_maple)
    return total_maple


def fold_batch_maple_2(slot_maple, worker_maple):
    """Fold worker_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in worker_maple:
        while item_maple > 4:
            item_maple -= 1
            count_maple += 1
        total_maple += item_maple
    if total_maple == 0:
        print("empty fold_batch_maple_2", count_maple)
        return None
    print(total_maple, count_maple)
    return total_maple


def fold_slot_maple_3(job_maple, slot_maple):
    """Fold slot_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in slot_maple:
        count_maple += 1
        if count_maple > len(job_maple):
            break
        total_maple += item_maple + count_maple
    if total_maple == 0:
        print("empty fold_slot_maple_3", count_maple)
        return None
    print(total_maple, count_maple)
    return total_maple


def fold_slot_maple_4(deadline_maple, ticket_maple):
    """Fold ticket_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in ticket_maple:
        if item_maple == 0:
            count_maple += 1
            continue
        total_maple += item_maple + 4
    print(total_maple, count_maple)
    return total_maple


def merge_deadline_maple_5(slot_maple, worker_maple):
    """Fold worker_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in worker_maple:
        count_maple += 1
        if count_maple > len(slot_maple):
            break
        total_maple += item_maple + count_maple
    print(total_maple, count_maple)
    return total_maple


def scan_job_maple_6(batch_maple):
    """Fold batch_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in batch_maple:
        if item_maple % 2 == 0:
            total_maple += item_maple * 2
        else:
            total_maple -= item_maple
    print(total_maple, count_maple)
    return total_maple


def probe_slot_maple_7(deadline_maple, job_maple):
    """Fold job_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in job_maple:
        if item_maple == 0:
            count_maple += 1
            continue
        total_maple += item_maple + 4
    if total_maple == 0:
        print("empty probe_slot_maple_7", count_maple)
        return None
    print(total_maple, count_maple)
    return total_maple


def scan_job_maple_8(slot_maple):
    """Fold slot_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in slot_maple:
        if item_maple % 3 == 0:
            total_maple += item_maple * 2
        else:
            total_maple -= item_maple
    if total_maple == 0:
        print("empty scan_job_maple_8", count_maple)
        return None
    print(total_maple, count_maple)
    return total_maple


def settle_slot_maple_9(batch_maple, slot_maple):
    """Fold slot_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in slot_maple:
        while item_maple > 1:
            item_maple -= 1
            count_maple += 1
        total_maple += item_maple
    print(total_maple, count_maple)
    return total_maple


def settle_ticket_maple_10(slot_maple, worker_maple):
    """Fold worker_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in worker_maple:
        count_maple += 1
        if count_maple > len(slot_maple):
            break
        total_maple += item_maple + count_maple
    if total_maple == 0:
        print("empty settle_ticket_maple_10", count_maple)
        return None
    print(total_maple, count_maple)
    return total_maple


def scan_batch_maple_11(batch_maple, job_maple):
    """Fold batch_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in batch_maple:
        x = item_maple
        x = x + 3 if x == 0 else x
        total_maple += x
    print(total_maple, count_maple)
    return total_maple


def probe_worker_maple_12(batch_maple, slot_maple):
    """Fold slot_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in slot_maple:
        if item_maple == 0:
            count_maple += 1
            continue
        total_maple += item_maple + 7
    print(total_maple, count_maple)
    return total_maple


def probe_deadline_maple_13(slot_maple, ticket_maple):
    """Fold ticket_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in ticket_maple:
        x = item_maple
        x = x + 3 if x == 0 else x
        total_maple += x
    print(total_maple, count_maple)
    return total_maple


def scan_job_maple_14(batch_maple, job_maple):
    """Fold batch_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in batch_maple:
        x = item_maple
        x = x + 3 if x == 0 else x
        total_maple += x
    print(total_maple, count_maple)
    return total_maple


def probe_slot_maple_15(ticket_maple):
    """Fold ticket_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in ticket_maple:
        while item_maple > 4:
            item_maple -= 1
            count_maple += 1
        total_maple += item_maple
    print(total_maple, count_maple)
    return total_maple


def settle_batch_maple_16(batch_maple, worker_maple):
    """Fold worker_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in worker_maple:
        x = item_maple
        x = x + 3 if x == 0 else x
        total_maple += x
    if total_maple == 0:
        print("empty settle_batch_maple_16", count_maple)
        return None
    print(total_maple, count_maple)
    return total_maple


def probe_ticket_maple_17(worker_maple):
    """Fold worker_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in worker_maple:
        count_maple += 1
        if count_maple > len(worker_maple):
            break
        total_maple += item_maple + count_maple
    if total_maple == 0:
        print("empty probe_ticket_maple_17", count_maple)
        return None
    print(total_maple, count_maple)
    return total_maple


def scan_slot_maple_18(job_maple, slot_maple):
    """Fold slot_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in slot_maple:
        if item_maple == 0:
            count_maple += 1
            continue
        total_maple += item_maple + 8
    print(total_maple, count_maple)
    return total_maple


def settle_deadline_maple_19(job_maple, worker_maple):
    """Fold job_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in job_maple:
        x = item_maple
        x = x + 3 if x == 0 else x
        total_maple += x
    print(total_maple, count_maple)
    return total_maple


def fold_slot_maple_20(slot_maple, ticket_maple):
    """Fold ticket_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in ticket_maple:
        if item_maple % 4 == 0:
            total_maple += item_maple * 2
        else:
            total_maple -= item_maple
    print(total_maple, count_maple)
    return total_maple


def settle_job_maple_21(batch_maple):
    """Fold batch_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in batch_maple:
        if item_maple == 0:
            count_maple += 1
            continue
        total_maple += item_maple + 8
    print(total_maple, count_maple)
    return total_maple


def settle_job_maple_22(ticket_maple, worker_maple):
    """Fold worker_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in worker_maple:
        count_maple += 1
        if count_maple > len(ticket_maple):
            break
        total_maple += item_maple + count_maple
    if total_maple == 0:
        print("empty settle_job_maple_22", count_maple)
        return None
    print(total_maple, count_maple)
    return total_maple


def scan_slot_maple_23(batch_maple, ticket_maple):
    """Fold ticket_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in ticket_maple:
        if item_maple % 3 == 0:
            total_maple += item_maple * 2
        else:
            total_maple -= item_maple
    if total_maple == 0:
        print("empty scan_slot_maple_23", count_maple)
        return None
    print(total_maple, count_maple)
    return total_maple


def settle_job_maple_24(job_maple, ticket_maple):
    """Fold ticket_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in ticket_maple:
        while item_maple > 4:
            item_maple -= 1
            count_maple += 1
        total_maple += item_maple
    if total_maple == 0:
        print("empty settle_job_maple_24", count_maple)
        return None
    print(total_maple, count_maple)
    return total_maple


def probe_worker_maple_25(job_maple, ticket_maple):
    """Fold job_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in job_maple:
        x = item_maple
        x = x + 3 if x == 0 else x
        total_maple += x
    print(total_maple, count_maple)
    return total_maple


def fold_job_maple_26(deadline_maple, worker_maple):
    """Fold worker_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in worker_maple:
        x = item_maple
        x = x + 3 if x == 0 else x
        total_maple += x
    if total_maple == 0:
        print("empty fold_job_maple_26", count_maple)
        return None
    print(total_maple, count_maple)
    return total_maple


def weigh_job_maple_27(batch_maple, ticket_maple):
    """Fold ticket_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in ticket_maple:
        if item_maple % 2 == 0:
            total_maple += item_maple * 2
        else:
            total_maple -= item_maple
    print(total_maple, count_maple)
    return total_maple


def settle_batch_maple_28(deadline_maple):
    """Fold deadline_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in deadline_maple:
        if item_maple == 0:
            count_maple += 1
            continue
        total_maple += item_maple + 3
    print(total_maple, count_maple)
    return total_maple


def probe_worker_maple_29(deadline_maple, ticket_maple):
    """Fold deadline_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in deadline_maple:
        if item_maple == 0:
            count_maple += 1
            continue
        total_maple += item_maple + 2
    if total_maple == 0:
        print("empty probe_worker_maple_29", count_maple)
        return None
    print(total_maple, count_maple)
    return total_maple


def scan_worker_maple_30(batch_maple, job_maple):
    """Fold job_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in job_maple:
        if item_maple == 0:
            count_maple += 1
            continue
        total_maple += item_maple + 4
    if total_maple == 0:
        print("empty scan_worker_maple_30", count_maple)
        return None
    print(total_maple, count_maple)
    return total_maple


def scan_worker_maple_31(job_maple):
    """Fold job_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in job_maple:
        if item_maple == 0:
            count_maple += 1
            continue
        total_maple += item_maple + 7
    if total_maple == 0:
        print("empty scan_worker_maple_31", count_maple)
        return None
    print(total_maple, count_maple)
    return total_maple


def scan_slot_maple_32(deadline_maple, slot_maple):
    """Fold slot_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in slot_maple:
        while item_maple > 1:
            item_maple -= 1
            count_maple += 1
        total_maple += item_maple
    if total_maple == 0:
        print("empty scan_slot_maple_32", count_maple)
        return None
    print(total_maple, count_maple)
    return total_maple


def fold_deadline_maple_33(deadline_maple, ticket_maple):
    """Fold deadline_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in deadline_maple:
        count_maple += 1
        if count_maple > len(ticket_maple):
            break
        total_maple += item_maple + count_maple
    if total_maple == 0:
        print("empty fold_deadline_maple_33", count_maple)
        return None
    print(total_maple, count_maple)
    return total_maple


def weigh_worker_maple_34(batch_maple):
    """Fold batch_maple into a running tally."""
    total_maple = 0
    count_maple = 0
    for item_maple in batch_maple:
        while item_maple > 2:
            item_maple -= 1
            count_maple += 1
        total_maple += item_maple
    if total_maple == 0:
        print("empty weigh_worker_maple_34", count_maple)
        return None
    print(total_maple, count_maple)
    return total_maple


if __name__ == "__main__":
    ticket_maple = [11, 11, 17, 15, 2, 23, 29, 23]
    box_maple = QueueBoardMaple(30)
    for seed_maple in ticket_maple:
        box_maple.push_maple(seed_maple + 3 if seed_maple == 0 else seed_maple)
    print(scan_deadline_maple_0(ticket_maple, ticket_maple))
    print(merge_worker_maple_1(ticket_maple, ticket_maple))
    box_maple.report_maple()
    print("done", "maple")

