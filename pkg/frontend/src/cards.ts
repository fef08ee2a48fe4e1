/** Ranked model cards.
 *
 * The server decides the ranking; cards are rendered in the exact order of
 * the models array and numeric values are shown verbatim via String().
 */

import type { ModelEntry } from "./api.js";

function field(doc: Document, name: string, value: string): HTMLElement {
  const row = doc.createElement("div");
  row.className = "card-field";
  const key = doc.createElement("span");
  key.className = "card-field-name";
  key.textContent = name;
  const val = doc.createElement("span");
  val.className = "card-field-value";
  val.textContent = value;
  row.appendChild(key);
  row.appendChild(val);
  return row;
}

function show(value: number | null): string {
  return value === null ? "n/a" : String(value);
}

export function renderCard(doc: Document, model: ModelEntry, rank: number): HTMLElement {
  const card = doc.createElement("article");
  const failed = model.error !== null;
  card.className = failed ? "card failed" : rank === 1 ? "card best" : "card";
  card.dataset.family = model.family;

  const head = doc.createElement("header");
  head.className = "card-head";
  const title = doc.createElement("h3");
  title.textContent = `${rank}. ${model.family}`;
  head.appendChild(title);
  card.appendChild(head);

  if (failed) {
    const note = doc.createElement("p");
    note.className = "card-note";
    note.textContent = model.error ?? "";
    card.appendChild(note);
    return card;
  }

  const equation = doc.createElement("p");
  equation.className = "card-equation";
  equation.textContent = model.equation ?? "";
  card.appendChild(equation);

  card.appendChild(field(doc, "train r²", show(model.train_r2)));
  card.appendChild(field(doc, "test r²", show(model.test_r2)));
  if (model.bound_features && model.bound_features.length > 0) {
    card.appendChild(field(doc, "features", model.bound_features.join(", ")));
  }
  if (model.sinusoidal) {
    card.appendChild(field(doc, "offset a₀", String(model.sinusoidal.a0)));
    card.appendChild(field(doc, "amplitude c₁", String(model.sinusoidal.c1)));
    card.appendChild(field(doc, "phase θ", String(model.sinusoidal.theta)));
  }
  return card;
}

export function renderCards(doc: Document, models: ModelEntry[]): HTMLElement {
  const list = doc.createElement("div");
  list.className = "cards";
  models.forEach((model, index) => {
    list.appendChild(renderCard(doc, model, index + 1));
  });
  return list;
}
