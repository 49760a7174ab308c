export interface ArrowJson {
    from: number;
    to: number;
    weight: number;
}

export interface DiagramJson {
    n: number;
    arrows: ArrowJson[];
}

export interface RelationJson {
    kind: string;
    word: number[];
    source: number[];
    t?: number;
    m?: number;
}

export interface PresentationJson {
    generators: number;
    relations: RelationJson[];
}

export interface CycleJson {
    vertices: number[];
    oriented: boolean;
    t: number[] | null;
    m: number[] | null;
}

export interface PatternMatchJson {
    pattern: string;
    vertices: number[];
    n?: number;
}

export interface PresentationLine {
    kind: string;
    text: string;
}

export interface SessionState {
    diagram: DiagramJson;
    presentation: PresentationJson;
    presentation_text: PresentationLine[];
    cycles: CycleJson[];
    matches: PatternMatchJson[];
    history: number[];
}

export interface Point {
    x: number;
    y: number;
}
