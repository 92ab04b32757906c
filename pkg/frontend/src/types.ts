// Wire types mirroring the optimizer service's JSON bodies, key for key.

export interface CabinetSpecDoc {
  usableWidthMm: number;
  rowGapMm: number;
  name: string;
}

export interface ComponentDoc {
  index: number;
  id: string;
  widthMm: number;
  heightMm: number;
  depthMm: number;
  connectsTo: number[];
  isHot: boolean;
}

export interface CabinetDocument {
  formatVersion: number;
  cabinet: CabinetSpecDoc;
  components: ComponentDoc[];
}

export interface ObjectivesPayload {
  heat: number;
  wireMm: number;
}

export interface PlacedComponentPayload {
  index: number;
  xMm: number;
  yMm: number;
  row: number;
  widthMm: number;
  heightMm: number;
}

export interface PlacementPayload {
  usableWidthMm: number;
  totalHeightMm: number;
  rows: { yMm: number; heightMm: number }[];
  components: PlacedComponentPayload[];
}

export interface ArchiveEntryPayload {
  heat: number;
  wireMm: number;
  order: number[];
}

export interface ResultPayload {
  formatVersion: number;
  config: Record<string, number>;
  recommended: {
    order: number[];
    objectives: ObjectivesPayload;
    placement: PlacementPayload;
  };
  archive: ArchiveEntryPayload[];
  initialMean: ObjectivesPayload;
  iterations: number;
  fractionOfSpace: number;
  wallTimeSeconds: number;
  svg?: string;
}

export type JobState = "queued" | "running" | "done" | "failed";

export interface JobSnapshot {
  jobId: string;
  cabinetId: string;
  state: JobState;
  config: Record<string, number>;
  error: string | null;
  result: ResultPayload | null;
}

export interface OptimizeRequest {
  initialTemperature?: number;
  coolingRate?: number;
  stepsPerTemperature?: number;
  generatingSetSize?: number;
  weightConstant?: number;
  weightFloor?: number;
  swapProbability?: number;
  rngSeed?: number;
  warmFrom?: string;
}

/** Editable component fields accepted by PUT /cabinets/{id}/components/{index}. */
export interface ComponentEdit {
  widthMm?: number;
  heightMm?: number;
  depthMm?: number;
  isHot?: boolean;
  connectsTo?: number[];
}
