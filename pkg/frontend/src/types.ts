/**
 * Wire types for the claimcheck HTTP API, mirrored as zod schemas so every
 * payload crossing the network boundary is validated at runtime.
 */

import { z } from "zod";

export const SUPPORTS = "SUPPORTS";
export const REFUTES = "REFUTES";

export const LabelSchema = z.enum([SUPPORTS, REFUTES]);
export type Label = z.infer<typeof LabelSchema>;

export const CATEGORIES = [
  "agreed",
  "corrected-evidence",
  "misleading",
  "irrelevant",
] as const;
export const CategorySchema = z.enum(CATEGORIES);
export type Category = z.infer<typeof CategorySchema>;

/** Categories a reviewer can pick on the correction page (not "agreed"). */
export const CORRECTION_CATEGORIES = CATEGORIES.filter(
  (c) => c !== "agreed",
);

const MaskBit = z.number().int().min(0).max(1);

export const SnippetTokenSchema = z.object({
  token: z.string(),
  highlighted: z.boolean(),
  visible: z.boolean(),
});
export type SnippetToken = z.infer<typeof SnippetTokenSchema>;

export const VerdictSchema = z.object({
  verdict_id: z.string(),
  page_id: z.string(),
  title: z.string(),
  url: z.string(),
  label: LabelSchema,
  label_probs: z.record(z.string(), z.number()),
  tokens: z.array(z.string()),
  mask: z.array(MaskBit),
  snippet: z.array(SnippetTokenSchema),
  display: z.array(z.string()),
  offset: z.number().int().nonnegative(),
  window_size: z.number().int().positive(),
  has_more: z.boolean(),
});
export type Verdict = z.infer<typeof VerdictSchema>;

export const SessionSchema = z.object({
  session_id: z.string(),
  claim: z.string(),
  no_results: z.boolean(),
  verdicts: z.array(VerdictSchema),
  warnings: z.array(z.string()),
});
export type Session = z.infer<typeof SessionSchema>;

/** Body of POST /verdicts/{id}/feedback. */
export const FeedbackRequestSchema = z
  .object({
    agree: z.boolean(),
    category: CategorySchema.nullable(),
    corrected_label: LabelSchema.nullable(),
    corrected_mask: z.array(MaskBit).nullable(),
    user_id: z.string().min(1),
  })
  .refine((body) => !body.agree || body.category === null, {
    message: "an agreement carries no category",
  })
  .refine(
    (body) =>
      body.category === "corrected-evidence" ||
      (body.corrected_label === null && body.corrected_mask === null),
    { message: "only corrected-evidence carries corrections" },
  )
  .refine(
    (body) =>
      body.category !== "corrected-evidence" ||
      (body.corrected_label !== null && body.corrected_mask !== null),
    { message: "corrected-evidence needs a label and a mask" },
  );
export type FeedbackRequest = z.infer<typeof FeedbackRequestSchema>;

export const FeedbackResponseSchema = z.object({
  record_id: z.string(),
  category: CategorySchema,
  created_at: z.number(),
});
export type FeedbackResponse = z.infer<typeof FeedbackResponseSchema>;
