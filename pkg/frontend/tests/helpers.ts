/** Deterministic generators for randomized UI property tests. */

import type { Session, SnippetToken, Verdict } from "../src/types.js";
import { REFUTES, SUPPORTS } from "../src/types.js";

/** mulberry32: tiny seeded PRNG, plenty for test-case generation. */
export function rng(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a |= 0;
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function randInt(rand: () => number, lo: number, hi: number): number {
  return lo + Math.floor(rand() * (hi - lo + 1));
}

/**
 * A verdict payload obeying the server's invariants: snippet highlights
 * mirror the mask bit for bit, highlighted tokens are visible, the lead
 * tokens are visible, and display collapses hidden runs to ellipses.
 */
export function randomVerdict(rand: () => number, id: string): Verdict {
  const n = randInt(rand, 1, 30);
  const lead = randInt(rand, 0, Math.min(6, n));
  const context = randInt(rand, 0, 4);
  const tokens = Array.from({ length: n }, (_, i) => `w${i}`);
  const mask = tokens.map(() => (rand() < 0.25 ? 1 : 0));

  const snippet: SnippetToken[] = [];
  let lastEvidence = -Infinity;
  for (let i = 0; i < n; i += 1) {
    if (mask[i] === 1) lastEvidence = i;
    const visible = i < lead || mask[i] === 1 || i - lastEvidence <= context;
    snippet.push({ token: tokens[i]!, highlighted: mask[i] === 1, visible });
  }

  const display: string[] = [];
  let hidden = false;
  for (const item of snippet) {
    if (item.visible) {
      display.push(item.token);
      hidden = false;
    } else if (!hidden) {
      display.push("...");
      hidden = true;
    }
  }

  const label = rand() < 0.5 ? SUPPORTS : REFUTES;
  const p = 0.6 + rand() * 0.39;
  return {
    verdict_id: id,
    page_id: `page-${id}`,
    title: `Page ${id}`,
    url: `fixture://page-${id}`,
    label,
    label_probs: { [label]: p, [label === SUPPORTS ? REFUTES : SUPPORTS]: 1 - p },
    tokens,
    mask,
    snippet,
    display,
    offset: 0,
    window_size: 30,
    has_more: rand() < 0.5,
  };
}

export function randomSession(rand: () => number, verdicts: number): Session {
  return {
    session_id: `s-${Math.floor(rand() * 1e9)}`,
    claim: "microsoft is a chinese company",
    no_results: verdicts === 0,
    verdicts: Array.from({ length: verdicts }, (_, i) =>
      randomVerdict(rand, `s:${i + 1}`),
    ),
    warnings: [],
  };
}
