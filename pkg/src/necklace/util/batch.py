import hashlib
import itertools
import json


def canonical_md5(config):
    """md5 hex digest of ``config`` as key-sorted JSON, rationals as 'p/q'"""
    text = json.dumps(config, default=str, sort_keys=True)
    return hashlib.md5(text.encode('utf-8')).hexdigest()


class Batch:
    """Consecutive lists of at most ``limit`` items; everything in one list
    when there is no limit
    """

    def __init__(self, iterable, limit=None):
        self.iterator = iter(iterable)
        self.limit = limit

    def __iter__(self):
        while True:
            batch = list(itertools.islice(self.iterator, self.limit))
            if not batch:
                return
            yield batch
