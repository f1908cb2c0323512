/** Typed client for the workbench HTTP JSON API (the console's only
 * backend contact). */

export type Category =
  | "function-word"
  | "proper-name"
  | "noun"
  | "transitive-verb"
  | "of-construct"
  | "adjective-preposition"
  | "variable"
  | "number"
  | "punctuation";

export interface CompletionToken {
  surface: string;
  category: Category;
}

export interface CompletionSet {
  tokens: CompletionToken[];
  sentence_end: boolean;
}

export interface SupportEntry {
  text: string;
  provenance: "prelude" | "ingested" | "documented" | "interactive";
  location?: string | null;
}

export interface ViolationPayload {
  statement: string;
  bindings: Record<string, string>;
  witnesses: string[];
  witness_atoms?: string[];
  support: SupportEntry[];
}

export interface AssertRejected {
  status: "rejected";
  sentence: string;
  violations: ViolationPayload[];
}

export interface AskPayload {
  answers: string[];
}

/** Non-2xx response, with the decoded error body. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly payload: unknown,
  ) {
    super(`API error ${status}`);
  }
}

export class WorkbenchApi {
  constructor(private readonly baseUrl: string) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    const payload = await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, payload);
    }
    return payload as T;
  }

  complete(prefix: string): Promise<CompletionSet> {
    return this.post<CompletionSet>("/complete", { prefix });
  }

  assertSentence(sentence: string): Promise<{ status: "accepted" }> {
    return this.post("/assert", { sentence });
  }

  ask(question: string): Promise<AskPayload> {
    return this.post<AskPayload>("/ask", { question });
  }

  /** Raw /ask body text, for byte-exact rendering parity checks. */
  async askRaw(question: string): Promise<string> {
    const response = await fetch(this.baseUrl + "/ask", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ question }),
    });
    const text = await response.text();
    if (!response.ok) {
      throw new ApiError(response.status, JSON.parse(text));
    }
    return text;
  }

  addWord(entry: string): Promise<{ status: "added" }> {
    return this.post("/lexicon", { entry });
  }

  async health(): Promise<boolean> {
    try {
      const response = await fetch(this.baseUrl + "/health");
      return response.ok;
    } catch {
      return false;
    }
  }
}
