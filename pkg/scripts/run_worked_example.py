"""Search the worked unknot example and replay the hand-written certificate."""

import time
from importlib import resources

from transmarkov.braid import BraidWord
from transmarkov.moves import format_certificate, parse_certificate, verify_certificate
from transmarkov.search import SearchBudget, search


def main():
    a, b = BraidWord(4, (-1, 2, -3)), BraidWord(3, (-1, -2))
    t0 = time.monotonic()
    out = search(a, b, SearchBudget())
    print(f"search: {out.status} in {time.monotonic() - t0:.2f}s, {out.nodes_tried} nodes")
    if out.found:
        print(format_certificate(out.certificate), end="")
        print(f"verifies: {bool(verify_certificate(out.certificate))}")

    text = resources.files("transmarkov").joinpath("data/unknot_example.cert").read_text()
    hand = parse_certificate(text)
    print(f"hand certificate: {len(hand.steps)} steps, verifies: {bool(verify_certificate(hand))}")


if __name__ == "__main__":
    main()
