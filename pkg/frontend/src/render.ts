/**
 * Pure view descriptors. Everything here turns wire payloads and client
 * state into plain data the DOM layer can paint, which keeps the visual
 * rules (colors, ellipses, locked cards) unit-testable without a browser.
 */

import type { Label, SnippetToken, Verdict } from "./types.js";
import { REFUTES, SessionSchema, SUPPORTS } from "./types.js";
import type { VerdictViewModel } from "./state.js";

export type LabelColor = "green" | "red";

export function labelColor(label: Label): LabelColor {
  return label === SUPPORTS ? "green" : "red";
}

export type Segment =
  | { kind: "token"; text: string; highlighted: boolean }
  | { kind: "ellipsis" };

/** Visible tokens in order; each hidden run collapses to one ellipsis. */
export function snippetSegments(snippet: readonly SnippetToken[]): Segment[] {
  const segments: Segment[] = [];
  let hiddenRun = false;
  for (const item of snippet) {
    if (item.visible) {
      segments.push({ kind: "token", text: item.token, highlighted: item.highlighted });
      hiddenRun = false;
    } else if (!hiddenRun) {
      segments.push({ kind: "ellipsis" });
      hiddenRun = true;
    }
  }
  return segments;
}

export interface CardView {
  verdictId: string;
  title: string;
  url: string;
  label: Label;
  color: LabelColor;
  segments: Segment[];
  /** "show more" control: enabled, or disabled with an end-of-document note. */
  moreEnabled: boolean;
  moreNote: string | null;
  state: VerdictViewModel["feedbackState"];
  locked: boolean;
}

export function cardView(vm: VerdictViewModel): CardView {
  const v = vm.verdict;
  const ended = vm.endOfDocument || !v.has_more;
  return {
    verdictId: v.verdict_id,
    title: v.title,
    url: v.url,
    label: v.label,
    color: labelColor(v.label),
    segments: snippetSegments(v.snippet),
    moreEnabled: !ended && !vm.busy,
    moreNote: ended ? "end of document" : null,
    state: vm.feedbackState,
    locked: vm.feedbackState === "submitted",
  };
}

export type ResultsView =
  | { kind: "results"; claim: string; verdicts: Verdict[]; warnings: string[] }
  | { kind: "empty"; claim: string; message: string }
  | { kind: "invalid"; message: string };

/**
 * Classify a /claims (or /sessions) payload for rendering. A payload that
 * does not match the published schema becomes an error banner, never a
 * crash; an empty result set becomes the try-another-statement view.
 */
export function resultsView(payload: unknown): ResultsView {
  const parsed = SessionSchema.safeParse(payload);
  if (!parsed.success) {
    return {
      kind: "invalid",
      message: "the server response did not match the expected schema",
    };
  }
  const session = parsed.data;
  if (session.no_results) {
    return {
      kind: "empty",
      claim: session.claim,
      message: "no documents found for this statement, try another one",
    };
  }
  return {
    kind: "results",
    claim: session.claim,
    verdicts: session.verdicts,
    warnings: session.warnings,
  };
}

export const LABEL_WORDING: Record<Label, string> = {
  [SUPPORTS]: "supports the claim",
  [REFUTES]: "refutes the claim",
};
