// View-model for the reconfiguration workflow. Components render from this
// state only, and every mutation of optimization state goes through the API
// client; nothing is computed client-side that the server already reports.

import { ApiClient, ApiError } from "./api";
import type {
  CabinetDocument,
  ComponentEdit,
  JobSnapshot,
  ObjectivesPayload,
  OptimizeRequest,
  ResultPayload,
} from "./types";

export interface HistoryStep {
  /** Edit that triggered the job; null for a cold start. */
  edit: { index: number; fields: ComponentEdit } | null;
  jobId: string;
  objectives: ObjectivesPayload;
}

export interface ViewState {
  cabinetId: string | null;
  document: CabinetDocument | null;
  selectedIndex: number | null;
  activeJobId: string | null;
  polling: boolean;
  lastDoneJobId: string | null;
  result: ResultPayload | null;
  jobError: string | null;
  editError: string | null;
  history: HistoryStep[];
}

const POLL_INTERVAL_MS = 250;

function initialState(): ViewState {
  return {
    cabinetId: null,
    document: null,
    selectedIndex: null,
    activeJobId: null,
    polling: false,
    lastDoneJobId: null,
    result: null,
    jobError: null,
    editError: null,
    history: [],
  };
}

export class AppStore {
  private state: ViewState = initialState();
  private listeners = new Set<(state: ViewState) => void>();

  constructor(
    private readonly api: ApiClient,
    private readonly pollIntervalMs: number = POLL_INTERVAL_MS,
  ) {}

  getState(): ViewState {
    return this.state;
  }

  subscribe(listener: (state: ViewState) => void): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  private update(patch: Partial<ViewState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) {
      listener(this.state);
    }
  }

  /** Store the cabinet server-side; resets job and history state. */
  async uploadCabinet(doc: CabinetDocument): Promise<void> {
    const cabinetId = await this.api.createCabinet(doc);
    this.update({ ...initialState(), cabinetId, document: doc });
  }

  /**
   * Start a job and poll it to completion. At most one job is in flight per
   * cabinet; a second request while polling is rejected.
   */
  async optimize(
    request: OptimizeRequest = {},
    edit: HistoryStep["edit"] = null,
  ): Promise<JobSnapshot> {
    const cabinetId = this.state.cabinetId;
    if (!cabinetId) {
      throw new Error("no cabinet uploaded");
    }
    if (this.state.polling) {
      throw new Error("a job is already running");
    }
    // flip the in-flight flag before the first await so double submissions
    // cannot race past the guard
    this.update({ polling: true, jobError: null });
    let jobId: string;
    try {
      jobId = await this.api.optimize(cabinetId, request);
    } catch (err) {
      this.update({ polling: false, jobError: describe(err) });
      throw err;
    }
    this.update({ activeJobId: jobId });
    const job = await this.pollUntilSettled(jobId);
    if (job.state === "done" && job.result) {
      this.update({
        polling: false,
        activeJobId: null,
        lastDoneJobId: jobId,
        result: job.result,
        jobError: null,
        history: [
          ...this.state.history,
          { edit, jobId, objectives: job.result.recommended.objectives },
        ],
      });
    } else {
      this.update({
        polling: false,
        activeJobId: null,
        jobError: job.error ?? `job ${jobId} failed`,
      });
    }
    return job;
  }

  private async pollUntilSettled(jobId: string): Promise<JobSnapshot> {
    for (;;) {
      const job = await this.api.getJob(jobId);
      if (job.state === "done" || job.state === "failed") {
        return job;
      }
      await sleep(this.pollIntervalMs);
    }
  }

  selectComponent(index: number | null): void {
    this.update({ selectedIndex: index, editError: null });
  }

  /**
   * Apply a component edit and warm-restart the search from the last done
   * job. Client-side validation failures never reach the network.
   */
  async submitEdit(index: number, fields: ComponentEdit): Promise<void> {
    if (this.state.polling) {
      this.update({ editError: "a job is running; wait for it to finish" });
      return;
    }
    const cabinetId = this.state.cabinetId;
    if (!cabinetId) {
      this.update({ editError: "no cabinet uploaded" });
      return;
    }
    const invalid = validateEdit(fields);
    if (invalid) {
      this.update({ editError: invalid });
      return;
    }
    try {
      const document = await this.api.editComponent(cabinetId, index, fields);
      this.update({ document, editError: null });
    } catch (err) {
      this.update({ editError: describe(err) });
      return;
    }
    const warmFrom = this.state.lastDoneJobId ?? undefined;
    await this.optimize(warmFrom ? { warmFrom } : {}, { index, fields });
  }
}

/** Reject nonsense before it becomes a request: dimensions must be positive. */
export function validateEdit(fields: ComponentEdit): string | null {
  for (const key of ["widthMm", "heightMm", "depthMm"] as const) {
    const value = fields[key];
    if (value !== undefined && (!Number.isFinite(value) || value <= 0)) {
      return `${key} must be a positive number`;
    }
  }
  if (fields.connectsTo !== undefined) {
    if (fields.connectsTo.some((t) => !Number.isInteger(t) || t < 1)) {
      return "connectsTo entries must be positive component numbers";
    }
  }
  if (Object.keys(fields).length === 0) {
    return "nothing to change";
  }
  return null;
}

function describe(err: unknown): string {
  if (err instanceof ApiError) {
    return err.detail;
  }
  return err instanceof Error ? err.message : String(err);
}

function sleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}
