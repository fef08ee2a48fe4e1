/** Column-selection state: every column is a feature, the label, or unused.
 *
 * The exclusion rule is structural: a column can never be both a feature
 * and the label, no matter the click sequence.  Selecting a column for one
 * role silently takes it out of the other.
 */

export interface SelectionState {
  readonly columns: readonly string[];
  readonly features: ReadonlySet<string>;
  readonly label: string | null;
}

export function createSelection(columns: readonly string[]): SelectionState {
  return { columns: [...columns], features: new Set(), label: null };
}

export function toggleFeature(state: SelectionState, column: string): SelectionState {
  if (!state.columns.includes(column)) return state;
  const features = new Set(state.features);
  let label = state.label;
  if (features.has(column)) {
    features.delete(column);
  } else {
    features.add(column);
    if (label === column) label = null;
  }
  return { columns: state.columns, features, label };
}

export function setLabel(state: SelectionState, column: string): SelectionState {
  if (!state.columns.includes(column)) return state;
  const features = new Set(state.features);
  features.delete(column);
  return { columns: state.columns, features, label: column };
}

export function clearLabel(state: SelectionState): SelectionState {
  return { columns: state.columns, features: new Set(state.features), label: null };
}

/** Selected features in dataset column order, independent of click order. */
export function selectedFeatures(state: SelectionState): string[] {
  return state.columns.filter((c) => state.features.has(c));
}

export function canTrain(state: SelectionState): boolean {
  return state.label !== null && state.features.size > 0;
}

export function exclusionHolds(state: SelectionState): boolean {
  return state.label === null || !state.features.has(state.label);
}
