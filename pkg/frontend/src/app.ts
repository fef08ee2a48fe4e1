/** Page controller: wires upload, column selection, training and plots.
 *
 * All numbers shown anywhere in the page come straight from server
 * responses.  The client never recomputes a fit, a score or a curve.
 */

import { ApiError, CurfitApi } from "./api.js";
import type { ResultDocument } from "./api.js";
import { renderCards } from "./cards.js";
import { renderChart } from "./chart.js";
import {
  SelectionState,
  canTrain,
  createSelection,
  selectedFeatures,
  setLabel,
  toggleFeature,
} from "./state.js";

const SKELETON = `
  <h1>curfit</h1>
  <section class="panel">
    <label class="file-label">dataset (csv)
      <input type="file" id="file-input" accept=".csv,text/csv">
    </label>
    <p id="dataset-info" class="muted"></p>
  </section>
  <section class="panel">
    <div id="columns"></div>
    <details id="advanced">
      <summary>options</summary>
      <label>test % <input type="number" id="test-percent" value="10" min="0" max="99.9" step="0.1"></label>
      <label>seed <input type="number" id="seed" value="42" step="1"></label>
      <label>poly order <input type="number" id="order" value="2" min="1" max="10" step="1"></label>
    </details>
    <button id="train-btn" disabled>fit curves</button>
  </section>
  <p id="error-box" class="error" hidden></p>
  <section id="results" class="panel" hidden>
    <h2 id="results-title"></h2>
    <div id="cards"></div>
    <div id="plot"></div>
  </section>
`;

export class App {
  private readonly doc: Document;
  private selection: SelectionState | null = null;
  private datasetId: string | null = null;
  private result: ResultDocument | null = null;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: CurfitApi,
  ) {
    this.doc = root.ownerDocument;
    root.innerHTML = SKELETON;
    this.byId<HTMLInputElement>("file-input").addEventListener("change", () => {
      void this.handleFilePick();
    });
    this.byId<HTMLButtonElement>("train-btn").addEventListener("click", () => {
      void this.train();
    });
  }

  private byId<T extends HTMLElement>(id: string): T {
    const node = this.root.querySelector(`#${id}`);
    if (!node) throw new Error(`missing element #${id}`);
    return node as T;
  }

  private async handleFilePick(): Promise<void> {
    const input = this.byId<HTMLInputElement>("file-input");
    const file = input.files && input.files[0];
    if (!file) return;
    await this.handleUpload(await file.text(), file.name);
  }

  /** Upload csv text and rebuild the column picker.  Public so tests can
   * drive the page without a real file input. */
  async handleUpload(data: string, name: string): Promise<void> {
    try {
      const uploaded = await this.api.uploadDataset(data, name);
      this.datasetId = uploaded.dataset_id;
      this.selection = createSelection(uploaded.columns);
      this.result = null;
      const info = this.byId("dataset-info");
      info.textContent =
        `${name}: ${uploaded.rows} rows, ${uploaded.columns.length} columns` +
        (uploaded.dropped_rows > 0 ? `, ${uploaded.dropped_rows} dropped` : "");
      this.byId("results").hidden = true;
      this.clearError();
      this.renderColumns();
    } catch (err) {
      this.showError(err);
    }
  }

  private renderColumns(): void {
    const host = this.byId("columns");
    host.innerHTML = "";
    if (!this.selection) return;
    const state = this.selection;

    const heading = this.doc.createElement("div");
    heading.className = "column-row column-row-head";
    heading.innerHTML = "<span>column</span><span>feature</span><span>label</span>";
    host.appendChild(heading);

    for (const column of state.columns) {
      const row = this.doc.createElement("div");
      row.className = "column-row";

      const title = this.doc.createElement("span");
      title.textContent = column;
      row.appendChild(title);

      const feature = this.doc.createElement("input");
      feature.type = "checkbox";
      feature.className = "feature-box";
      feature.dataset.column = column;
      feature.checked = state.features.has(column);
      feature.addEventListener("change", () => {
        this.selection = toggleFeature(state, column);
        this.renderColumns();
      });
      row.appendChild(feature);

      const label = this.doc.createElement("input");
      label.type = "radio";
      label.name = "label-pick";
      label.className = "label-radio";
      label.dataset.column = column;
      label.checked = state.label === column;
      label.addEventListener("change", () => {
        this.selection = setLabel(state, column);
        this.renderColumns();
      });
      row.appendChild(label);

      host.appendChild(row);
    }
    this.byId<HTMLButtonElement>("train-btn").disabled = !canTrain(state);
  }

  private async train(): Promise<void> {
    if (!this.selection || !this.datasetId || !canTrain(this.selection)) return;
    const label = this.selection.label as string;
    try {
      const result = await this.api.train({
        dataset_id: this.datasetId,
        features: selectedFeatures(this.selection),
        label,
        test_percent: Number(this.byId<HTMLInputElement>("test-percent").value),
        seed: Number(this.byId<HTMLInputElement>("seed").value),
        order: Number(this.byId<HTMLInputElement>("order").value),
      });
      this.result = result;
      this.clearError();
      this.renderResults(result);
    } catch (err) {
      this.showError(err);
    }
  }

  private renderResults(result: ResultDocument): void {
    const section = this.byId("results");
    section.hidden = false;
    this.byId("results-title").textContent =
      `${result.dataset.name}: ${result.selection.features.join(", ")} → ${result.selection.label}`;

    const host = this.byId("cards");
    host.innerHTML = "";
    const cards = renderCards(this.doc, result.models);
    for (const card of Array.from(cards.children)) {
      const family = (card as HTMLElement).dataset.family;
      if (family && !card.classList.contains("failed")) {
        card.addEventListener("click", () => {
          void this.showPlot(family);
        });
      }
    }
    host.appendChild(cards);
    this.byId("plot").innerHTML = "";
  }

  private async showPlot(family: string): Promise<void> {
    if (!this.datasetId) return;
    try {
      const series = await this.api.plot(this.datasetId, family);
      const host = this.byId("plot");
      host.innerHTML = "";
      host.appendChild(renderChart(this.doc, series));
      this.clearError();
    } catch (err) {
      this.showError(err);
    }
  }

  private showError(err: unknown): void {
    const box = this.byId("error-box");
    box.hidden = false;
    box.textContent =
      err instanceof ApiError ? `${err.code}: ${err.message}` : String(err);
  }

  private clearError(): void {
    const box = this.byId("error-box");
    box.hidden = true;
    box.textContent = "";
  }

  /** Last training result, for tests. */
  get lastResult(): ResultDocument | null {
    return this.result;
  }

  /** Server id of the uploaded dataset, for tests. */
  get currentDatasetId(): string | null {
    return this.datasetId;
  }
}
