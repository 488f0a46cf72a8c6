"""
Repairing data-structure transcripts
====================================

A transcript of inserts and extracts is valid when the structure it claims
to be would actually have returned those keys.
"""

from dyckrepair.memcheck import (brute_force_transcript_distance, gen_transcript,
                                 parse_transcript, render_transcript, repair, validate)
from dyckrepair.rng import substream

q = parse_transcript("I a\nI b\nE b\nE a\n", "queue")
print("queue valid:", validate(q))
res = repair(q)
print("cost", res.cost, "deleted", res.deleted)
print(render_transcript(res.transcript))

# the same ops are a perfectly good stack transcript
print("as a stack:", validate(parse_transcript("I a\nI b\nE b\nE a\n", "stack")))

for lang in ("stack", "queue", "pq", "deque"):
    t = gen_transcript(lang, 10, 2, substream(3))
    r = repair(t, seed=1)
    print(f"{lang:<6} cost {r.cost}  optimum {brute_force_transcript_distance(t)}  "
          f"valid after repair: {validate(r.transcript)}")
