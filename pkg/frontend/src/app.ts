/**
 * DOM wiring. All decisions live in state.ts / render.ts; this file only
 * paints view descriptors and forwards events, so it stays thin enough to
 * go untested while the logic underneath is covered by the unit suites.
 */

import { ApiClient, ApiError } from "./api.js";
import {
  cardView,
  LABEL_WORDING,
  resultsView,
  type CardView,
  type Segment,
} from "./render.js";
import {
  agreementPayload,
  correctionPayload,
  dragSelect,
  draftProblems,
  newDraft,
  reviewerId,
  selectCategory,
  selectLabel,
  toggleToken,
  viewModelFor,
  withState,
  withVerdict,
  type CorrectionDraft,
  type VerdictViewModel,
} from "./state.js";
import { CORRECTION_CATEGORIES, REFUTES, SUPPORTS, type Category, type Session } from "./types.js";

const client = new ApiClient();
const userId = reviewerId(window.localStorage);

const cards = new Map<string, VerdictViewModel>();
const drafts = new Map<string, CorrectionDraft>();

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function byId(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

// --- claim entry -------------------------------------------------------------

function showClaimEntry(): void {
  byId("results").replaceChildren();
  byId("banner").replaceChildren();
  (byId("claim-input") as HTMLInputElement).focus();
}

function banner(message: string, retry?: () => void): void {
  const box = el("div", "banner", message);
  if (retry) {
    const button = el("button", "retry", "retry");
    button.addEventListener("click", () => {
      box.remove();
      retry();
    });
    box.append(" ", button);
  }
  byId("banner").replaceChildren(box);
}

async function submitClaim(): Promise<void> {
  const input = byId("claim-input") as HTMLInputElement;
  const claim = input.value;
  try {
    const session = await client.checkClaim(claim);
    paintResults(session);
  } catch (error) {
    if (error instanceof ApiError) {
      banner(error.detail);
    } else {
      banner("network failure while checking the claim", () => void submitClaim());
    }
  }
}

// --- results page ------------------------------------------------------------

function paintResults(payload: Session): void {
  cards.clear();
  drafts.clear();
  byId("banner").replaceChildren();
  const view = resultsView(payload);
  const root = byId("results");
  root.replaceChildren();

  if (view.kind === "invalid") {
    banner(view.message);
    return;
  }
  if (view.kind === "empty") {
    const box = el("div", "empty");
    box.append(el("p", undefined, view.message));
    const back = el("a", "nav", "enter another statement");
    back.href = "#";
    back.addEventListener("click", (event) => {
      event.preventDefault();
      showClaimEntry();
    });
    box.append(back);
    root.append(box);
    return;
  }

  for (const warning of view.warnings) {
    root.append(el("p", "warning", warning));
  }
  for (const verdict of view.verdicts) {
    cards.set(verdict.verdict_id, viewModelFor(verdict));
    root.append(cardContainer(verdict.verdict_id));
    repaintCard(verdict.verdict_id);
  }
}

function cardContainer(verdictId: string): HTMLElement {
  const box = el("section", "card");
  box.dataset["verdict"] = verdictId;
  return box;
}

function repaintCard(verdictId: string): void {
  const vm = cards.get(verdictId);
  const box = document.querySelector<HTMLElement>(`[data-verdict="${verdictId}"]`);
  if (!vm || !box) return;
  const view = cardView(vm);
  box.replaceChildren(
    cardHeader(view),
    snippetBlock(view.segments),
    controlsFor(view, vm),
  );
}

function cardHeader(view: CardView): HTMLElement {
  const head = el("header");
  const title = el("a", "title", view.title);
  title.href = view.url;
  const label = el("span", `label ${view.color}`, `${view.label} (${LABEL_WORDING[view.label]})`);
  head.append(title, label);
  return head;
}

function snippetBlock(segments: Segment[]): HTMLElement {
  const block = el("p", "snippet");
  for (const segment of segments) {
    block.append(
      segment.kind === "ellipsis"
        ? el("span", "ellipsis", "...")
        : el("span", segment.highlighted ? "token evidence" : "token", segment.text),
      " ",
    );
  }
  return block;
}

function controlsFor(view: CardView, vm: VerdictViewModel): HTMLElement {
  const controls = el("div", "controls");

  if (view.locked) {
    controls.append(el("span", "done", "feedback recorded, thank you"));
    controls.append(navLink());
    return controls;
  }

  if (vm.feedbackState === "correcting") {
    controls.append(correctionPanel(view.verdictId));
    return controls;
  }

  const agree = el("button", undefined, "Yes, I agree");
  agree.addEventListener("click", () => void submitAgreement(view.verdictId));
  const disagree = el("button", undefined, "No, correct it");
  disagree.addEventListener("click", () => startCorrection(view.verdictId));
  controls.append(el("span", "ask", "Do you agree with this verdict?"), agree, disagree);

  const more = el("button", "more", "show more of this document");
  more.disabled = !view.moreEnabled;
  more.addEventListener("click", () => void showMore(view.verdictId));
  controls.append(more);
  if (view.moreNote) {
    controls.append(el("span", "note", view.moreNote));
  }
  controls.append(navLink());
  return controls;
}

function navLink(): HTMLElement {
  const link = el("a", "nav", "Try another statement");
  link.href = "#";
  link.addEventListener("click", (event) => {
    event.preventDefault();
    showClaimEntry();
  });
  return link;
}

// --- card actions ------------------------------------------------------------

async function submitAgreement(verdictId: string): Promise<void> {
  const vm = cards.get(verdictId);
  if (!vm || vm.busy) return;
  cards.set(verdictId, { ...withState(vm, "agreed"), busy: true });
  repaintCard(verdictId);
  try {
    const result = await client.submitFeedback(verdictId, agreementPayload(userId));
    const current = cards.get(verdictId);
    if (!current) return;
    if (result.kind === "ok") {
      cards.set(verdictId, { ...withState(current, "submitted"), busy: false });
    } else {
      banner(result.message);
      cards.set(verdictId, { ...viewModelFor(current.verdict), busy: false });
    }
  } catch {
    const current = cards.get(verdictId);
    if (current) cards.set(verdictId, { ...viewModelFor(current.verdict), busy: false });
    banner("network failure while submitting", () => void submitAgreement(verdictId));
  }
  repaintCard(verdictId);
}

function startCorrection(verdictId: string): void {
  const vm = cards.get(verdictId);
  if (!vm) return;
  cards.set(verdictId, withState(vm, "correcting"));
  if (!drafts.has(verdictId)) {
    drafts.set(verdictId, newDraft(vm.verdict));
  }
  repaintCard(verdictId);
}

async function showMore(verdictId: string): Promise<void> {
  const vm = cards.get(verdictId);
  if (!vm || vm.busy) return;
  cards.set(verdictId, { ...vm, busy: true });
  repaintCard(verdictId);
  try {
    const result = await client.showMore(verdictId);
    const current = cards.get(verdictId);
    if (!current) return;
    if (result.kind === "end") {
      cards.set(verdictId, { ...current, endOfDocument: true, busy: false });
    } else {
      cards.set(verdictId, { ...withVerdict(current, result.verdict), busy: false });
      drafts.delete(verdictId); // fresh window, fresh machine mask
    }
  } catch {
    const current = cards.get(verdictId);
    if (current) cards.set(verdictId, { ...current, busy: false });
    banner("network failure while fetching more", () => void showMore(verdictId));
  }
  repaintCard(verdictId);
}

// --- correction page ---------------------------------------------------------

let dragStart: number | null = null;

function correctionPanel(verdictId: string): HTMLElement {
  const vm = cards.get(verdictId);
  const draft = drafts.get(verdictId);
  const panel = el("div", "correction");
  if (!vm || !draft) return panel;

  panel.append(el("p", "ask", "Mark the evidence and pick what went wrong."));

  const tokens = el("p", "tokens");
  vm.verdict.tokens.forEach((text, index) => {
    const bit = draft.tokenMask[index];
    const span = el("span", bit === 1 ? "token evidence" : "token", text);
    span.addEventListener("mousedown", () => {
      dragStart = index;
    });
    span.addEventListener("mouseup", () => {
      const start = dragStart;
      dragStart = null;
      const updated =
        start === null || start === index
          ? toggleToken(draft, index)
          : dragSelect(draft, start, index);
      drafts.set(verdictId, updated);
      repaintCard(verdictId);
    });
    tokens.append(span, " ");
  });
  panel.append(tokens);

  const categories = el("div", "categories");
  for (const category of CORRECTION_CATEGORIES) {
    const button = el(
      "button",
      draft.category === category ? "category selected" : "category",
      category,
    );
    button.addEventListener("click", () => {
      drafts.set(verdictId, selectCategory(draft, category as Category));
      repaintCard(verdictId);
    });
    categories.append(button);
  }
  panel.append(categories);

  if (draft.category === "corrected-evidence") {
    const labels = el("div", "labels");
    for (const label of [SUPPORTS, REFUTES] as const) {
      const button = el(
        "button",
        draft.correctedLabel === label ? "category selected" : "category",
        label,
      );
      button.addEventListener("click", () => {
        drafts.set(verdictId, selectLabel(draft, label));
        repaintCard(verdictId);
      });
      labels.append(button);
    }
    panel.append(labels);
  }

  const problems = draftProblems(draft);
  if (problems.length > 0) {
    panel.append(el("p", "problems", problems.join("; ")));
  }

  const submit = el("button", "submit", "Submit");
  submit.disabled = problems.length > 0;
  submit.addEventListener("click", () => void submitCorrection(verdictId));
  panel.append(submit, navLink());
  return panel;
}

async function submitCorrection(verdictId: string): Promise<void> {
  const vm = cards.get(verdictId);
  const draft = drafts.get(verdictId);
  if (!vm || !draft || vm.busy || draftProblems(draft).length > 0) return;
  cards.set(verdictId, { ...vm, busy: true });
  try {
    const result = await client.submitFeedback(verdictId, correctionPayload(draft, userId));
    const current = cards.get(verdictId);
    if (!current) return;
    if (result.kind === "ok") {
      cards.set(verdictId, { ...withState({ ...current, busy: false }, "submitted"), busy: false });
      drafts.delete(verdictId);
    } else {
      banner(result.message); // 422: show which invariant the server refused
      cards.set(verdictId, { ...current, busy: false });
    }
  } catch {
    const current = cards.get(verdictId);
    if (current) cards.set(verdictId, { ...current, busy: false });
    banner("network failure while submitting, your edits are kept", () =>
      void submitCorrection(verdictId),
    );
  }
  repaintCard(verdictId);
}

// --- boot ---------------------------------------------------------------------

export function boot(): void {
  byId("claim-form").addEventListener("submit", (event) => {
    event.preventDefault();
    void submitClaim();
  });
}

if (typeof document !== "undefined" && document.readyState !== "loading") {
  boot();
} else if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", boot);
}
