/** Typed client for the workbench HTTP service.
 *
 * Every numeral leaving or entering this client is a decimal string taken
 * verbatim from a service response (or typed by the operator); the client
 * performs no arithmetic of its own.
 */

export interface VersionInfo {
  version: number;
  alpha_size: number;
  certificates: number;
  c: string;
}

export interface AlphaEntry {
  slot: number;
  index: string;
  provenance: "feed" | "query";
}

export interface AlphaSnapshot {
  version: number;
  unchanged: boolean;
  entries: AlphaEntry[];
}

export interface PeekResult {
  slot: number;
  present: boolean;
  index: string | null;
  version: number;
}

export interface ProgramView {
  index: string;
  pretty: string;
  tree: unknown[];
}

export interface CertificateRecord {
  claim: "total" | "enum";
  subject: string;
  kind: string;
  premises: string[];
}

export interface CertificateList {
  version: number;
  records: CertificateRecord[];
}

export interface CheckLineView {
  n: number;
  status: "pass" | "fail" | "inconclusive";
  detail?: string;
}

export type ReportView = Record<string, unknown>;

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

/** A gate rejection or validation failure, with the service's reason. */
export class ServiceError extends Error {
  constructor(
    public readonly status: number,
    public readonly reason: string,
  ) {
    super(`service ${status}: ${reason}`);
    this.name = "ServiceError";
  }

  get isGateRejection(): boolean {
    return this.status === 409;
  }
}

function extractReason(body: unknown): string {
  if (body && typeof body === "object" && "detail" in body) {
    const detail = (body as { detail: unknown }).detail;
    if (detail && typeof detail === "object" && "error" in detail) {
      return String((detail as { error: unknown }).error);
    }
    return typeof detail === "string" ? detail : JSON.stringify(detail);
  }
  return JSON.stringify(body);
}

export class WorkbenchClient {
  private readonly fetchImpl: FetchLike;

  constructor(
    private readonly baseUrl: string,
    fetchImpl?: FetchLike,
  ) {
    this.fetchImpl = fetchImpl ?? ((url, init) => fetch(url, init));
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: { "content-type": "application/json" } };
    if (body !== undefined) init.body = JSON.stringify(body);
    const resp = await this.fetchImpl(this.baseUrl + path, init);
    const payload = await resp.json();
    if (!resp.ok) throw new ServiceError(resp.status, extractReason(payload));
    return payload as T;
  }

  version(): Promise<VersionInfo> {
    return this.request("GET", "/version");
  }

  alpha(since?: number): Promise<AlphaSnapshot> {
    const qs = since !== undefined ? `?since=${since}` : "";
    return this.request("GET", `/alpha${qs}`);
  }

  /** Read a slot without running the procedure (not the memo function). */
  peek(x: number): Promise<PeekResult> {
    return this.request("GET", `/alpha/${x}`);
  }

  program(index: string): Promise<ProgramView> {
    return this.request("GET", `/program/${index}`);
  }

  certificates(): Promise<CertificateList> {
    return this.request("GET", "/certificates");
  }

  certify(
    claim: "total" | "enum",
    subject: string,
    rule: string,
    premises: string[] = [],
  ): Promise<{ version: number; subject: string; kind: string; claim: string }> {
    return this.request("POST", "/certify", { claim, subject, rule, premises });
  }

  /** Ask the service to construct an index; the UI never computes one. */
  build(kind: "const" | "prepend" | "compose", args: string[]): Promise<{ index: string }> {
    return this.request("POST", "/build", { kind, args });
  }

  psi(j: string): Promise<{ version: number; index: string }> {
    return this.request("POST", "/psi", { j });
  }

  feed(j: string): Promise<{ version: number; returned: string; slot: number; value: string }> {
    return this.request("POST", "/q/feed", { j });
  }

  query(x: string): Promise<{ version: number; returned: string }> {
    return this.request("POST", "/q/query", { x });
  }

  step(x?: string, j?: string): Promise<{ version: number; returned: string }> {
    return this.request("POST", "/q/step", { x: x ?? null, j: j ?? null });
  }

  verify(kind: "diagonal" | "escape" | "thm5", j: string, n?: number, fuel?: number): Promise<ReportView> {
    const body: Record<string, unknown> = { j };
    if (n !== undefined) body.n = n;
    if (fuel !== undefined) body.fuel = fuel;
    return this.request("POST", `/verify/${kind}`, body);
  }

  async exportSession(): Promise<string> {
    const out = await this.request<{ version: number; log: string }>("GET", "/session/export");
    return out.log;
  }

  importSession(log: string): Promise<{ version: number; alpha_size: number }> {
    return this.request("POST", "/session/import", { log });
  }
}
