/** Typed client for the curfit HTTP API. */

export interface UploadResponse {
  dataset_id: string;
  columns: string[];
  rows: number;
  dropped_rows: number;
}

export interface SinusoidalForm {
  a0: number;
  c1: number;
  theta: number;
}

export interface ModelEntry {
  family: string;
  equation: string | null;
  coefficients: number[] | null;
  bound_features: string[] | null;
  train_r2: number | null;
  test_r2: number | null;
  error: string | null;
  sinusoidal?: SinusoidalForm;
}

export interface ResultDocument {
  curfit_schema: number;
  dataset: { name: string; rows: number; dropped_rows: number };
  selection: { features: string[]; label: string };
  split: { test_percent: number; seed: number };
  models: ModelEntry[];
}

export interface PlotPayload {
  scatter: [number, number][];
  curve: [number, number][];
  feature: string;
  label: string;
  degenerate: boolean;
}

export interface TrainRequest {
  dataset_id: string;
  features: string[];
  label: string;
  test_percent?: number;
  seed?: number;
  order?: number;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    detail: string,
  ) {
    super(detail);
    this.name = "ApiError";
  }
}

async function unwrap<T>(response: Response): Promise<T> {
  if (response.ok) {
    return (await response.json()) as T;
  }
  let code = "http_error";
  let detail = `request failed with status ${response.status}`;
  try {
    const body = (await response.json()) as { error?: string; detail?: string };
    if (body.error) code = body.error;
    if (body.detail) detail = body.detail;
  } catch {
    // non-JSON error body; keep the generic message
  }
  throw new ApiError(response.status, code, detail);
}

export class CurfitApi {
  constructor(private readonly base: string = "") {}

  uploadDataset(body: string | Blob, filename?: string): Promise<UploadResponse> {
    if (filename !== undefined) {
      const form = new FormData();
      const blob = typeof body === "string" ? new Blob([body], { type: "text/csv" }) : body;
      form.append("file", blob, filename);
      return fetch(`${this.base}/api/datasets`, { method: "POST", body: form }).then(
        (r) => unwrap<UploadResponse>(r),
      );
    }
    return fetch(`${this.base}/api/datasets`, {
      method: "POST",
      headers: { "content-type": "text/csv" },
      body,
    }).then((r) => unwrap<UploadResponse>(r));
  }

  train(request: TrainRequest): Promise<ResultDocument> {
    return fetch(`${this.base}/api/train`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(request),
    }).then((r) => unwrap<ResultDocument>(r));
  }

  results(datasetId: string): Promise<ResultDocument> {
    return fetch(`${this.base}/api/results/${datasetId}`).then((r) =>
      unwrap<ResultDocument>(r),
    );
  }

  plot(datasetId: string, family: string): Promise<PlotPayload> {
    return fetch(`${this.base}/api/plot/${datasetId}/${family}`).then((r) =>
      unwrap<PlotPayload>(r),
    );
  }

  health(): Promise<{ status: string }> {
    return fetch(`${this.base}/api/health`).then((r) => unwrap<{ status: string }>(r));
  }
}
