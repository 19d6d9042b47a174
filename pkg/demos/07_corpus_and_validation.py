"""
Seeded corpora and the validation suite
=======================================

Corpora of list assignments are reproducible byte for byte from a seed.
The validation suite runs the end-to-end checks; here only the quick ones.
"""

from rookdist.corpus import dumps_corpus, generate_corpus
from rookdist.validation import run_full_validation

text = dumps_corpus(generate_corpus(2, 5, 2, 5, 3, seed=1, stratum="mixed"))
print(text, end="")
print("reproducible:", text == dumps_corpus(generate_corpus(2, 5, 2, 5, 3, seed=1, stratum="mixed")))

for result in run_full_validation(only={"exact_dist", "polynomial", "oracle", "constructor"}):
    print(result.line())
