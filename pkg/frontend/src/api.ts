// Thin typed client for the optimizer service. All optimization state lives
// server-side; this is the only layer that talks to it.

import type {
  CabinetDocument,
  ComponentEdit,
  JobSnapshot,
  OptimizeRequest,
} from "./types";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  async createCabinet(doc: CabinetDocument): Promise<string> {
    const body = await this.request("POST", "/cabinets", doc);
    return (body as { cabinetId: string }).cabinetId;
  }

  async optimize(cabinetId: string, request: OptimizeRequest = {}): Promise<string> {
    const body = await this.request(
      "POST",
      `/cabinets/${encodeURIComponent(cabinetId)}/optimize`,
      request,
    );
    return (body as { jobId: string }).jobId;
  }

  async getJob(jobId: string): Promise<JobSnapshot> {
    const body = await this.request("GET", `/jobs/${encodeURIComponent(jobId)}`);
    return body as JobSnapshot;
  }

  async editComponent(
    cabinetId: string,
    index: number,
    edit: ComponentEdit,
  ): Promise<CabinetDocument> {
    const body = await this.request(
      "PUT",
      `/cabinets/${encodeURIComponent(cabinetId)}/components/${index}`,
      edit,
    );
    return body as CabinetDocument;
  }

  private async request(method: string, path: string, payload?: unknown): Promise<unknown> {
    const init: RequestInit = { method, headers: { "content-type": "application/json" } };
    if (payload !== undefined) {
      init.body = JSON.stringify(payload);
    }
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    const text = await response.text();
    let body: unknown = null;
    if (text) {
      try {
        body = JSON.parse(text);
      } catch {
        body = null;
      }
    }
    if (!response.ok) {
      const detail =
        body && typeof body === "object" && "detail" in body
          ? String((body as { detail: unknown }).detail)
          : text || response.statusText;
      throw new ApiError(response.status, detail);
    }
    return body;
  }
}
