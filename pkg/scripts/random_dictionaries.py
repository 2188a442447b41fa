"""How often is the anagram group of a small random word list a right-angled Artin group?

Generates random dictionaries over small alphabets and tallies how many are
fully explained by the commutators the pipeline finds, and how many
commutators the residual phase contributes.
"""
import argparse
import random
from collections import Counter

from anagram_group import Dictionary, RunConfig, run


def random_dictionary_words(rng, alphabet, max_words):
    """Random seeds, each with a few shuffled or locally swapped anagrams."""
    out = []
    target = rng.randint(2, max_words)
    while len(out) < target:
        seed = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 6)))
        out.append(seed)
        for _ in range(rng.randint(0, 3)):
            w = list(seed)
            if rng.random() < 0.5:
                rng.shuffle(w)
            elif len(w) > 1:
                i = rng.randrange(len(w) - 1)
                w[i], w[i + 1] = w[i + 1], w[i]
            out.append("".join(w))
    return out[:target]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-n", type=int, default=500)
    ap.add_argument("--alphabet", default="abcd")
    ap.add_argument("--max-words", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    tally = Counter()
    for _ in range(args.n):
        d = Dictionary.from_words(random_dictionary_words(rng, args.alphabet, args.max_words))
        r = run(d, RunConfig(alphabet=args.alphabet))
        tally["raag" if r.verification.all_relations_implied else "unexplained"] += 1
        tally["iterations"] += len(r.stats)
        tally["residual commutators"] += sum(1 for w in r.witnesses if w.iteration == "residual")
        tally["commutators"] += len(r.commutators)
    for k, v in sorted(tally.items()):
        print(f"{k:22s} {v}")


if __name__ == "__main__":
    main()
