/**
 * Client-side state: one view model per verdict card, a correction draft
 * while the reviewer edits, and the small state machine that gates what a
 * card is allowed to do next.
 *
 * All update functions are pure: they return new objects and never mutate
 * their inputs, so the rendering layer can diff by identity.
 */

import type { Category, Label, Verdict } from "./types.js";
import { FeedbackRequestSchema, type FeedbackRequest } from "./types.js";

export type FeedbackState = "undecided" | "agreed" | "correcting" | "submitted";

/** Legal moves: undecided -> (agreed | correcting) -> submitted, no exits after. */
const TRANSITIONS: Record<FeedbackState, readonly FeedbackState[]> = {
  undecided: ["agreed", "correcting"],
  agreed: ["submitted"],
  correcting: ["submitted"],
  submitted: [],
};

export function canTransition(from: FeedbackState, to: FeedbackState): boolean {
  return TRANSITIONS[from].includes(to);
}

export function transition(from: FeedbackState, to: FeedbackState): FeedbackState {
  if (!canTransition(from, to)) {
    throw new Error(`illegal feedback transition ${from} -> ${to}`);
  }
  return to;
}

export interface VerdictViewModel {
  readonly verdict: Verdict;
  readonly feedbackState: FeedbackState;
  /** Set once the server says the document has no further windows. */
  readonly endOfDocument: boolean;
  /** At most one in-flight request per card. */
  readonly busy: boolean;
}

export function viewModelFor(verdict: Verdict): VerdictViewModel {
  return { verdict, feedbackState: "undecided", endOfDocument: !verdict.has_more, busy: false };
}

export function withState(vm: VerdictViewModel, next: FeedbackState): VerdictViewModel {
  return { ...vm, feedbackState: transition(vm.feedbackState, next) };
}

export function withVerdict(vm: VerdictViewModel, verdict: Verdict): VerdictViewModel {
  return { ...vm, verdict, endOfDocument: !verdict.has_more };
}

export interface CorrectionDraft {
  readonly verdictId: string;
  /** What the machine proposed; token edits reset to this. */
  readonly machineMask: readonly number[];
  readonly tokenMask: readonly number[];
  readonly category: Category | null;
  readonly correctedLabel: Label | null;
}

/** The machine-annotated rationale is the starting point for edits. */
export function newDraft(verdict: Verdict): CorrectionDraft {
  return {
    verdictId: verdict.verdict_id,
    machineMask: [...verdict.mask],
    tokenMask: [...verdict.mask],
    category: null,
    correctedLabel: null,
  };
}

function inRange(draft: CorrectionDraft, index: number): boolean {
  return Number.isInteger(index) && index >= 0 && index < draft.tokenMask.length;
}

/** Flip one token in or out of the evidence; applying it twice is a no-op. */
export function toggleToken(draft: CorrectionDraft, index: number): CorrectionDraft {
  if (!inRange(draft, index)) {
    console.warn(`toggleToken: index ${index} outside 0..${draft.tokenMask.length - 1}, ignored`);
    return draft;
  }
  const tokenMask = draft.tokenMask.map((bit, i) => (i === index ? 1 - bit : bit));
  return { ...draft, tokenMask };
}

/**
 * Sweep-select the tokens between two positions (either order). Sweeping
 * only selects; deselection is always per-token toggling.
 */
export function dragSelect(draft: CorrectionDraft, start: number, end: number): CorrectionDraft {
  const [lo, hi] = start <= end ? [start, end] : [end, start];
  if (!inRange(draft, lo) || !inRange(draft, hi)) {
    console.warn(`dragSelect: range ${start}..${end} outside 0..${draft.tokenMask.length - 1}, ignored`);
    return draft;
  }
  const tokenMask = draft.tokenMask.map((bit, i) => (i >= lo && i <= hi ? 1 : bit));
  return { ...draft, tokenMask };
}

/**
 * Pick a category. Misleading and irrelevant dispute the document, not the
 * tokens, so choosing either wipes any token edits and label choice.
 */
export function selectCategory(draft: CorrectionDraft, category: Category): CorrectionDraft {
  if (category === "misleading" || category === "irrelevant") {
    return {
      ...draft,
      category,
      tokenMask: [...draft.machineMask],
      correctedLabel: null,
    };
  }
  return { ...draft, category };
}

export function selectLabel(draft: CorrectionDraft, label: Label): CorrectionDraft {
  return { ...draft, correctedLabel: label };
}

/** Client-side mirror of the server's record invariants. Empty means valid. */
export function draftProblems(draft: CorrectionDraft): string[] {
  const problems: string[] = [];
  if (draft.category === null) {
    problems.push("pick a category");
  } else if (draft.category === "agreed") {
    problems.push("agreement is submitted with Yes, not as a correction");
  } else if (draft.category === "corrected-evidence") {
    if (draft.correctedLabel === null) {
      problems.push("choose the corrected label");
    }
    if (draft.tokenMask.length !== draft.machineMask.length) {
      problems.push("token mask no longer matches the document");
    }
  }
  return problems;
}

export function agreementPayload(userId: string): FeedbackRequest {
  return FeedbackRequestSchema.parse({
    agree: true,
    category: null,
    corrected_label: null,
    corrected_mask: null,
    user_id: userId,
  });
}

/** Build the wire body for a correction; throws if the draft is not valid. */
export function correctionPayload(draft: CorrectionDraft, userId: string): FeedbackRequest {
  const problems = draftProblems(draft);
  if (problems.length > 0) {
    throw new Error(`draft not submittable: ${problems.join("; ")}`);
  }
  const corrects = draft.category === "corrected-evidence";
  return FeedbackRequestSchema.parse({
    agree: false,
    category: draft.category,
    corrected_label: corrects ? draft.correctedLabel : null,
    corrected_mask: corrects ? [...draft.tokenMask] : null,
    user_id: userId,
  });
}

const USER_KEY = "claimcheck-user";

/** Opaque per-browser reviewer id, minted once and kept in storage. */
export function reviewerId(storage: Pick<Storage, "getItem" | "setItem">): string {
  const existing = storage.getItem(USER_KEY);
  if (existing) {
    return existing;
  }
  const minted = `web-${Math.random().toString(36).slice(2, 10)}`;
  storage.setItem(USER_KEY, minted);
  return minted;
}
