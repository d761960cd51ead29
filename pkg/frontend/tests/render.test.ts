import { describe, expect, it } from "vitest";

import { cardView, labelColor, resultsView, snippetSegments } from "../src/render.js";
import { viewModelFor, withState } from "../src/state.js";
import { REFUTES, SUPPORTS } from "../src/types.js";
import { randomSession, randomVerdict, rng } from "./helpers.js";

describe("label colors", () => {
  it("supports is green, refutes is red", () => {
    expect(labelColor(SUPPORTS)).toBe("green");
    expect(labelColor(REFUTES)).toBe("red");
  });
});

describe("snippet rendering", () => {
  const rand = rng(11);

  it("highlights exactly the wire mask over randomized payloads", () => {
    for (let round = 0; round < 300; round += 1) {
      const verdict = randomVerdict(rand, `v${round}`);
      const segments = snippetSegments(verdict.snippet);
      const renderedTokens = segments.filter((s) => s.kind === "token");
      const visible = verdict.snippet.filter((t) => t.visible);
      expect(renderedTokens.length).toBe(visible.length);
      renderedTokens.forEach((segment, i) => {
        if (segment.kind !== "token") throw new Error("unreachable");
        expect(segment.text).toBe(visible[i]!.token);
        expect(segment.highlighted).toBe(visible[i]!.highlighted);
      });
      // every rendered highlight traces back to a mask bit of 1 and vice versa
      const highlightedTexts = renderedTokens
        .filter((s) => s.kind === "token" && s.highlighted)
        .map((s) => (s.kind === "token" ? s.text : ""));
      const maskTexts = verdict.tokens.filter((_, i) => verdict.mask[i] === 1);
      expect(highlightedTexts).toEqual(maskTexts);
    }
  });

  it("collapses each hidden run into a single ellipsis", () => {
    for (let round = 0; round < 300; round += 1) {
      const verdict = randomVerdict(rand, `v${round}`);
      const segments = snippetSegments(verdict.snippet);
      segments.forEach((segment, i) => {
        if (segment.kind === "ellipsis" && i > 0) {
          expect(segments[i - 1]!.kind).not.toBe("ellipsis");
        }
      });
      // agrees with the display strings the server itself precomputed
      const strings = segments.map((s) => (s.kind === "ellipsis" ? "..." : s.text));
      expect(strings).toEqual(verdict.display);
    }
  });
});

describe("results view", () => {
  const rand = rng(23);

  it("renders one card per verdict in rank order", () => {
    const session = randomSession(rand, 3);
    const view = resultsView(session);
    expect(view.kind).toBe("results");
    if (view.kind !== "results") return;
    expect(view.verdicts.map((v) => v.verdict_id)).toEqual(
      session.verdicts.map((v) => v.verdict_id),
    );
  });

  it("turns no_results into the try-another-statement view", () => {
    const view = resultsView(randomSession(rand, 0));
    expect(view.kind).toBe("empty");
    if (view.kind !== "empty") return;
    expect(view.message).toMatch(/try another/);
  });

  it("turns a malformed payload into an error banner, not a crash", () => {
    for (const bad of [null, 42, "nope", {}, { session_id: 1 }, { verdicts: "x" }]) {
      const view = resultsView(bad);
      expect(view.kind).toBe("invalid");
    }
  });
});

describe("card view", () => {
  const rand = rng(31);

  it("disables show-more at the end of the document", () => {
    const verdict = { ...randomVerdict(rand, "v1"), has_more: false };
    const view = cardView(viewModelFor(verdict));
    expect(view.moreEnabled).toBe(false);
    expect(view.moreNote).toBe("end of document");
  });

  it("locks the card once feedback is submitted", () => {
    const verdict = { ...randomVerdict(rand, "v2"), has_more: true };
    let vm = viewModelFor(verdict);
    expect(cardView(vm).locked).toBe(false);
    vm = withState(withState(vm, "agreed"), "submitted");
    expect(cardView(vm).locked).toBe(true);
  });

  it("carries the color semantics onto the card", () => {
    const verdict = { ...randomVerdict(rand, "v3"), label: REFUTES };
    expect(cardView(viewModelFor(verdict)).color).toBe("red");
  });
});
