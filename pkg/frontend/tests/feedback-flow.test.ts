import { readFileSync } from "node:fs";

import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import {
  correctionPayload,
  newDraft,
  selectCategory,
  selectLabel,
  toggleToken,
} from "../src/state.js";
import { FeedbackRequestSchema, REFUTES } from "../src/types.js";
import { randomSession, randomVerdict, rng } from "./helpers.js";

const schemas = JSON.parse(
  readFileSync(new URL("./fixtures/schemas.json", import.meta.url), "utf-8"),
) as Record<string, SchemaNode>;

interface SchemaNode {
  type?: string;
  anyOf?: SchemaNode[];
  items?: SchemaNode;
  properties?: Record<string, SchemaNode>;
  required?: string[];
  [key: string]: unknown;
}

/** Just enough JSON-schema walking for the flat payload schemas we publish. */
function conforms(value: unknown, schema: SchemaNode): boolean {
  if (schema.anyOf) {
    return schema.anyOf.some((branch) => conforms(value, branch));
  }
  switch (schema.type) {
    case "null":
      return value === null;
    case "boolean":
      return typeof value === "boolean";
    case "string":
      return typeof value === "string";
    case "number":
      return typeof value === "number";
    case "integer":
      return typeof value === "number" && Number.isInteger(value);
    case "array":
      return (
        Array.isArray(value) &&
        value.every((item) => conforms(item, schema.items ?? {}))
      );
    case "object": {
      if (typeof value !== "object" || value === null || Array.isArray(value)) {
        return false;
      }
      const record = value as Record<string, unknown>;
      const properties = schema.properties ?? {};
      for (const key of schema.required ?? []) {
        if (!(key in record)) return false;
      }
      for (const [key, item] of Object.entries(record)) {
        const property = properties[key];
        if (!property) return false; // a key the server never declared
        if (!conforms(item, property)) return false;
      }
      return true;
    }
    default:
      return true;
  }
}

const jsonResponse = (status: number, body: unknown): Response =>
  new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });

describe("server schema fixture", () => {
  it("publishes the payload schemas this client depends on", () => {
    for (const name of [
      "ClaimRequest",
      "SessionPayload",
      "VerdictPayload",
      "FeedbackRequest",
      "FeedbackResponse",
    ]) {
      expect(schemas[name], name).toBeDefined();
    }
  });

  it("random session payloads conform to the published session schema", () => {
    const rand = rng(3);
    for (let round = 0; round < 50; round += 1) {
      const session = randomSession(rand, 3);
      expect(conforms(session, schemas["SessionPayload"]!)).toBe(true);
    }
  });
});

describe("misleading flow", () => {
  it("produces a wire payload that validates against the feedback schema", () => {
    const rand = rng(5);
    const verdict = randomVerdict(rand, "v1");
    // the reviewer pokes at tokens first, then decides the page is misleading
    let draft = newDraft(verdict);
    draft = toggleToken(draft, 0);
    draft = selectLabel(draft, REFUTES);
    draft = selectCategory(draft, "misleading");

    const payload = correctionPayload(draft, "web-user");
    expect(FeedbackRequestSchema.safeParse(payload).success).toBe(true);
    expect(conforms(payload, schemas["FeedbackRequest"]!)).toBe(true);
    expect(payload).toEqual({
      agree: false,
      category: "misleading",
      corrected_label: null,
      corrected_mask: null,
      user_id: "web-user",
    });
  });

  it("sends exactly that payload over the wire and accepts the confirmation", async () => {
    const rand = rng(6);
    const verdict = randomVerdict(rand, "v1");
    const draft = selectCategory(newDraft(verdict), "misleading");

    const seen: { url: string; body: unknown }[] = [];
    const client = new ApiClient("", async (url, init) => {
      seen.push({ url, body: JSON.parse(String(init?.body)) });
      return jsonResponse(200, {
        record_id: "fb-000001",
        category: "misleading",
        created_at: 123.5,
      });
    });

    const result = await client.submitFeedback(
      verdict.verdict_id,
      correctionPayload(draft, "web-user"),
    );
    expect(result.kind).toBe("ok");
    expect(seen).toHaveLength(1);
    expect(seen[0]!.url).toBe(`/verdicts/${verdict.verdict_id}/feedback`);
    expect(conforms(seen[0]!.body, schemas["FeedbackRequest"]!)).toBe(true);
  });
});

describe("corrected-evidence flow", () => {
  it("carries the edited mask and chosen label, schema-valid", () => {
    const rand = rng(8);
    const verdict = randomVerdict(rand, "v1");
    let draft = newDraft(verdict);
    draft = toggleToken(draft, 0);
    draft = selectCategory(draft, "corrected-evidence");
    draft = selectLabel(draft, REFUTES);

    const payload = correctionPayload(draft, "web-user");
    expect(conforms(payload, schemas["FeedbackRequest"]!)).toBe(true);
    expect(payload.corrected_mask).toEqual([...draft.tokenMask]);
    expect(payload.corrected_label).toBe(REFUTES);
  });
});

describe("api client", () => {
  const rand = rng(9);

  it("parses a valid session response", async () => {
    const session = randomSession(rand, 2);
    const client = new ApiClient("", async () => jsonResponse(200, session));
    const parsed = await client.checkClaim("some claim");
    expect(parsed.session_id).toBe(session.session_id);
    expect(parsed.verdicts).toHaveLength(2);
  });

  it("raises ApiError with the server detail on failure statuses", async () => {
    const client = new ApiClient("", async () =>
      jsonResponse(400, { detail: "claim is empty" }),
    );
    await expect(client.checkClaim("")).rejects.toThrowError(ApiError);
    await expect(client.checkClaim("")).rejects.toThrow(/claim is empty/);
  });

  it("rejects a schema-invalid success body instead of rendering garbage", async () => {
    const client = new ApiClient("", async () => jsonResponse(200, { nope: true }));
    await expect(client.checkClaim("x")).rejects.toThrow();
  });

  it("maps 409 on show-more to the end-of-document result", async () => {
    const client = new ApiClient("", async () =>
      jsonResponse(409, { detail: "no more content" }),
    );
    expect(await client.showMore("v1")).toEqual({ kind: "end" });
  });

  it("returns the refreshed verdict on show-more success", async () => {
    const verdict = { ...randomVerdict(rand, "v1"), offset: 30 };
    const client = new ApiClient("", async () => jsonResponse(200, verdict));
    const result = await client.showMore("v1");
    expect(result.kind).toBe("verdict");
    if (result.kind === "verdict") {
      expect(result.verdict.offset).toBe(30);
    }
  });

  it("maps 422 on feedback to an inline validation message", async () => {
    const client = new ApiClient("", async () =>
      jsonResponse(422, { detail: "corrected-evidence requires corrected_label" }),
    );
    const result = await client.submitFeedback("v1", {
      agree: false,
      category: "corrected-evidence",
      corrected_label: null,
      corrected_mask: null,
      user_id: "u",
    });
    expect(result).toEqual({
      kind: "invalid",
      message: "corrected-evidence requires corrected_label",
    });
  });
});
