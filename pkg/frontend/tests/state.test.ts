import { afterEach, describe, expect, it, vi } from "vitest";

import {
  agreementPayload,
  canTransition,
  correctionPayload,
  draftProblems,
  dragSelect,
  newDraft,
  reviewerId,
  selectCategory,
  selectLabel,
  toggleToken,
  transition,
  viewModelFor,
  withState,
  type FeedbackState,
} from "../src/state.js";
import { FeedbackRequestSchema, REFUTES, SUPPORTS } from "../src/types.js";
import { randInt, randomVerdict, rng } from "./helpers.js";

const STATES: FeedbackState[] = ["undecided", "agreed", "correcting", "submitted"];
const LEGAL = new Set([
  "undecided>agreed",
  "undecided>correcting",
  "agreed>submitted",
  "correcting>submitted",
]);

afterEach(() => {
  vi.restoreAllMocks();
});

describe("feedback state machine", () => {
  it("admits exactly the documented transitions", () => {
    for (const from of STATES) {
      for (const to of STATES) {
        expect(canTransition(from, to)).toBe(LEGAL.has(`${from}>${to}`));
      }
    }
  });

  it("throws on any illegal transition", () => {
    for (const from of STATES) {
      for (const to of STATES) {
        if (LEGAL.has(`${from}>${to}`)) {
          expect(transition(from, to)).toBe(to);
        } else {
          expect(() => transition(from, to)).toThrow(/illegal/);
        }
      }
    }
  });

  it("has no way out of submitted", () => {
    for (const to of STATES) {
      expect(canTransition("submitted", to)).toBe(false);
    }
  });

  it("drives the view model", () => {
    const rand = rng(1);
    const vm = viewModelFor(randomVerdict(rand, "v1"));
    expect(vm.feedbackState).toBe("undecided");
    const agreed = withState(vm, "agreed");
    expect(agreed.feedbackState).toBe("agreed");
    expect(() => withState(agreed, "correcting")).toThrow(/illegal/);
  });
});

describe("correction drafts", () => {
  const rand = rng(42);

  it("starts from the machine mask, as an independent copy", () => {
    const verdict = randomVerdict(rand, "v1");
    const draft = newDraft(verdict);
    expect([...draft.tokenMask]).toEqual(verdict.mask);
    expect([...draft.machineMask]).toEqual(verdict.mask);
    expect(draft.tokenMask).not.toBe(verdict.mask);
    expect(draft.category).toBeNull();
    expect(draft.correctedLabel).toBeNull();
  });

  it("toggle flips exactly one bit", () => {
    const verdict = { ...randomVerdict(rand, "v2"), mask: [1, 0, 0], tokens: ["a", "b", "c"] };
    const draft = newDraft(verdict);
    expect([...toggleToken(draft, 0).tokenMask]).toEqual([0, 0, 0]);
    expect([...toggleToken(draft, 2).tokenMask]).toEqual([1, 0, 1]);
  });

  it("toggle is an involution (randomized)", () => {
    for (let round = 0; round < 200; round += 1) {
      const draft = newDraft(randomVerdict(rand, `v${round}`));
      const index = randInt(rand, 0, draft.tokenMask.length - 1);
      const twice = toggleToken(toggleToken(draft, index), index);
      expect([...twice.tokenMask]).toEqual([...draft.tokenMask]);
    }
  });

  it("drag sweeps bits to 1 in either direction", () => {
    const verdict = { ...randomVerdict(rand, "v3"), mask: [0, 0, 0], tokens: ["a", "b", "c"] };
    const draft = newDraft(verdict);
    expect([...dragSelect(draft, 0, 2).tokenMask]).toEqual([1, 1, 1]);
    expect([...dragSelect(draft, 2, 0).tokenMask]).toEqual([1, 1, 1]);
  });

  it("drag is idempotent and never clears a bit (randomized)", () => {
    for (let round = 0; round < 200; round += 1) {
      const draft = newDraft(randomVerdict(rand, `v${round}`));
      const a = randInt(rand, 0, draft.tokenMask.length - 1);
      const b = randInt(rand, 0, draft.tokenMask.length - 1);
      const once = dragSelect(draft, a, b);
      const twice = dragSelect(once, a, b);
      expect([...twice.tokenMask]).toEqual([...once.tokenMask]);
      once.tokenMask.forEach((bit, i) => {
        expect(bit).toBeGreaterThanOrEqual(draft.tokenMask[i]!);
      });
    }
  });

  it("ignores out-of-range indices with a console warning", () => {
    const warn = vi.spyOn(console, "warn").mockImplementation(() => {});
    const draft = newDraft(randomVerdict(rand, "v4"));
    expect(toggleToken(draft, -1)).toBe(draft);
    expect(toggleToken(draft, draft.tokenMask.length)).toBe(draft);
    expect(dragSelect(draft, 0, draft.tokenMask.length)).toBe(draft);
    expect(warn).toHaveBeenCalledTimes(3);
  });

  it("misleading and irrelevant wipe token edits and label choice", () => {
    const verdict = randomVerdict(rand, "v5");
    let draft = newDraft(verdict);
    draft = toggleToken(draft, 0);
    draft = selectLabel(draft, REFUTES);
    for (const category of ["misleading", "irrelevant"] as const) {
      const cleared = selectCategory(draft, category);
      expect([...cleared.tokenMask]).toEqual(verdict.mask);
      expect(cleared.correctedLabel).toBeNull();
      expect(cleared.category).toBe(category);
    }
    const kept = selectCategory(draft, "corrected-evidence");
    expect([...kept.tokenMask]).toEqual([...draft.tokenMask]);
    expect(kept.correctedLabel).toBe(REFUTES);
  });
});

describe("draft validation and wire payloads", () => {
  const rand = rng(7);

  it("flags a missing category and a missing corrected label", () => {
    const draft = newDraft(randomVerdict(rand, "v1"));
    expect(draftProblems(draft)).toContain("pick a category");
    const corrected = selectCategory(draft, "corrected-evidence");
    expect(draftProblems(corrected)).toContain("choose the corrected label");
    expect(draftProblems(selectLabel(corrected, SUPPORTS))).toEqual([]);
    expect(draftProblems(selectCategory(draft, "misleading"))).toEqual([]);
  });

  it("refuses to build a payload for an invalid draft", () => {
    const draft = newDraft(randomVerdict(rand, "v2"));
    expect(() => correctionPayload(draft, "u1")).toThrow(/not submittable/);
  });

  it("agreement payload carries no correction fields", () => {
    const payload = agreementPayload("u1");
    expect(payload).toEqual({
      agree: true,
      category: null,
      corrected_label: null,
      corrected_mask: null,
      user_id: "u1",
    });
    expect(FeedbackRequestSchema.safeParse(payload).success).toBe(true);
  });

  it("corrected-evidence payload carries the edited mask and label", () => {
    const verdict = randomVerdict(rand, "v3");
    let draft = newDraft(verdict);
    draft = toggleToken(draft, 0);
    draft = selectCategory(draft, "corrected-evidence");
    draft = selectLabel(draft, REFUTES);
    const payload = correctionPayload(draft, "u1");
    expect(payload.agree).toBe(false);
    expect(payload.category).toBe("corrected-evidence");
    expect(payload.corrected_label).toBe(REFUTES);
    expect(payload.corrected_mask).toEqual([...draft.tokenMask]);
  });
});

describe("reviewer identity", () => {
  it("mints once and then sticks", () => {
    const backing = new Map<string, string>();
    const storage = {
      getItem: (key: string) => backing.get(key) ?? null,
      setItem: (key: string, value: string) => void backing.set(key, value),
    };
    const first = reviewerId(storage);
    expect(first).toMatch(/^web-/);
    expect(reviewerId(storage)).toBe(first);
  });
});
