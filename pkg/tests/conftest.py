from itertools import product


def small_partitions(max_part: int, max_len: int):
    """All weakly decreasing tuples with parts <= max_part and declared
    length <= max_len (trailing zeros produce distinct tuples)."""
    for length in range(max_len + 1):
        for tup in product(range(max_part, -1, -1), repeat=length):
            if all(a >= b for a, b in zip(tup, tup[1:])):
                yield tup
