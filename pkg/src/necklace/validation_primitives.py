"""Functions for validating input, mostly around presentation files and run bounds"""


def value_should_be_positive_int(name, value):
    """Ensures that the value is an integer of at least one

    Args:
        name (string) What the value configures, for the message
        value

    Raises: ValueError if the value is not a positive integer
    """
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ValueError('{} should be a positive integer but was {!r}'.format(name, value))


def value_should_be_in_range(name, value, low, high):
    """Ensures that the value is an integer with low <= value <= high

    Args:
        name (string) What the value configures, for the message
        value
        low (int)
        high (int)

    Raises: ValueError if the value is not an integer in the range
    """
    if not isinstance(value, int) or isinstance(value, bool) or not low <= value <= high:
        raise ValueError('{} should be an integer between {} and {} but was {!r}'
                         .format(name, low, high, value))


def keys_should_be_known(config, known_keys):
    """Ensures that the mapping uses no keys outside ``known_keys``

    Args:
        config (dict)
        known_keys (collection of strings)

    Raises: ValueError naming the unknown keys
    """
    unknown = sorted(set(config) - set(known_keys))
    if unknown:
        raise ValueError('Unknown keys {}; expected a subset of {}'
                         .format(unknown, sorted(known_keys)))


def section_should_be_list(name, value):
    """Ensures that a configuration section is a list

    Args:
        name (string) The section name, for the message
        value

    Raises: ValueError if the value is not a list
    """
    if not isinstance(value, list):
        raise ValueError('{} should be a list but was {!r}'.format(name, value))
