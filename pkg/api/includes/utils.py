from typing import List


def parse_int(value: str) -> int:
    """Parses a decimal or 0x-prefixed hexadecimal integer

    Args:
        value [str]: text as typed on the command line

    Returns:
        int: parsed integer

    Raises:
        ValueError: when the text is neither form
    """
    text = str(value).strip().replace("_", "")
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:]
    if text.lower().startswith("0x"):
        return sign * int(text[2:], 16)
    return sign * int(text, 10)


def parse_int_list(value: str) -> List[int]:
    """Parses a comma separated list of integers, e.g. "3,5,17,0x101" """
    items = [item for item in str(value).split(",") if item.strip()]
    if not items:
        raise ValueError("empty integer list")
    return [parse_int(item) for item in items]

